#ifndef CONSENT_EXTENDED_REAL_HPP
#define CONSENT_EXTENDED_REAL_HPP

#include <stdexcept>
#include <string>

#include "consent/rational.hpp"

namespace consent {

/// A rational value or negative infinity. Negative infinity encodes an
/// infeasible choice; it compares below every finite value, and max/argmax
/// over mixed sets are well defined. No other non-finite value exists.
class ExtReal {
public:
  ExtReal() : finite_(true), value_() {}
  ExtReal(Rational v) : finite_(true), value_(v) {}
  ExtReal(std::int64_t v) : finite_(true), value_(Rational(v)) {}

  static ExtReal neg_inf() {
    ExtReal r;
    r.finite_ = false;
    return r;
  }

  bool finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw std::logic_error("value() on -inf");
    return value_;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  std::string str() const { return finite_ ? value_.str() : "-inf"; }

private:
  bool finite_;
  Rational value_;
};

inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

} // namespace consent

#endif
