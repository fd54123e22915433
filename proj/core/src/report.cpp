#include "qdissect/report.hpp"

namespace qdissect {

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Uncovered: return "uncovered";
    }
    return "unknown";
}

Outcome SweepReport::overall() const {
    Outcome result = Outcome::Pass;
    for (const auto& level : levels) {
        if (level.outcome == Outcome::Fail) return Outcome::Fail;
        if (level.outcome == Outcome::Uncovered) result = Outcome::Uncovered;
    }
    return result;
}

} // namespace qdissect
