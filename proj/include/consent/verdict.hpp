#ifndef CONSENT_VERDICT_HPP
#define CONSENT_VERDICT_HPP

#include <string>

namespace consent {

enum class Verdict { Pass, Fail, VacuousFail, Refused };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::VacuousFail: return "VACUOUS-FAIL";
    case Verdict::Refused: return "REFUSED";
  }
  return "?";
}

} // namespace consent

#endif
