#include "asw/errors.hpp"

namespace asw {

std::string_view to_string(error_code c) {
    switch (c) {
        case error_code::division_by_zero: return "division_by_zero";
        case error_code::field_mismatch: return "field_mismatch";
        case error_code::unsupported_field: return "unsupported_field";
        case error_code::insufficient_precision: return "insufficient_precision";
        case error_code::invalid_composition: return "invalid_composition";
        case error_code::no_root: return "no_root";
        case error_code::hypothesis_violation: return "hypothesis_violation";
        case error_code::non_totally_ramified: return "non_totally_ramified";
        case error_code::integrality_failure: return "integrality_failure";
        case error_code::consistency_failure: return "consistency_failure";
        case error_code::hasse_arf_violation: return "hasse_arf_violation";
        case error_code::ghost_inversion_failure: return "ghost_inversion_failure";
        case error_code::vanishing_failure: return "vanishing_failure";
        case error_code::infeasible: return "infeasible";
        case error_code::parse_error: return "parse_error";
        case error_code::homogeneity_failure: return "homogeneity_failure";
    }
    return "unknown";
}

}  // namespace asw
