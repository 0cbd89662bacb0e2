#pragma once

namespace lieact {

// Three-valued answer for facts that may be structurally undecidable from
// the given data (no matrix realization attached, unknown orientability,
// ...).  unknown always means "not determined", never "false".
enum class TriState { yes, no, unknown };

inline const char* tri_str(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        default: return "unknown";
    }
}

}  // namespace lieact
