#pragma once

#include <stdexcept>
#include <string>

namespace vallab {

enum class errc {
    invalid_argument,
    parse_error,
    zero_polynomial,
    zero_function,
    division_by_zero,
    not_certified,
    depth_exceeded,
    precision_exhausted,
    budget_exceeded,
    same_point,
    different_prime,
    not_in_domain_at_center,
    divisibility_violation,
    construction_failed,
    dedekind_failed,
};

const char* errc_name(errc c);

// Library-wide exception type; the CLI maps errc to exit codes.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace vallab
