#ifndef ASW_ERRORS_HPP
#define ASW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace asw {

// Machine-readable error codes; the CLI prints them and maps them to exit codes.
enum class error_code {
    division_by_zero,
    field_mismatch,
    unsupported_field,
    insufficient_precision,
    invalid_composition,
    no_root,
    hypothesis_violation,
    non_totally_ramified,
    integrality_failure,
    consistency_failure,
    hasse_arf_violation,
    ghost_inversion_failure,
    vanishing_failure,
    infeasible,
    parse_error,
    homogeneity_failure,
};

std::string_view to_string(error_code c);

class error : public std::runtime_error {
  public:
    error(error_code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    error_code code() const noexcept { return code_; }

  private:
    error_code code_;
};

class insufficient_precision : public error {
  public:
    explicit insufficient_precision(const std::string& what)
        : error(error_code::insufficient_precision, what) {}
};

[[noreturn]] inline void fail(error_code c, const std::string& what) {
    if (c == error_code::insufficient_precision)
        throw insufficient_precision(what);
    throw error(c, what);
}

}  // namespace asw

#endif  // ASW_ERRORS_HPP
