#pragma once

#include <string>

namespace pcmconley {

enum class Status {
    Certified,         // property established exactly
    Violated,          // exact counterexample in hand
    Unknown,           // neither certificate within the configured bounds
    RefinementNeeded,  // the current grid/code resolution cannot decide
};

inline std::string status_str(Status s) {
    switch (s) {
        case Status::Certified: return "certified";
        case Status::Violated: return "violated";
        case Status::Unknown: return "unknown";
        case Status::RefinementNeeded: return "refinement-needed";
    }
    return "unknown";
}

}  // namespace pcmconley
