#ifndef CONSENT_ERRORS_HPP
#define CONSENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace consent {

/// Thrown when a predicted enumeration or profile-scan size exceeds the
/// configured budget. Refusal is loud by design; callers surface it as a
/// REFUSED verdict rather than degrading to a partial scan.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, unsigned long long predicted, bool saturated)
      : std::runtime_error(what), predicted_(predicted), saturated_(saturated) {}

  unsigned long long predicted() const { return predicted_; }
  bool saturated() const { return saturated_; }

  std::string predicted_str() const {
    return saturated_ ? ">= 2^63" : std::to_string(predicted_);
  }

private:
  unsigned long long predicted_;
  bool saturated_;
};

} // namespace consent

#endif
