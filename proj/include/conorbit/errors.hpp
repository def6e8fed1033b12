#ifndef CONORBIT_ERRORS_HPP
#define CONORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conorbit {

enum class errc {
    not_prime,
    cap_exceeded,
    zero_element,
    bad_subfield_size,
    incompatible_order,
    not_a_unit,
    not_coprime,
    not_in_unit_subgroup,
    subfield_violation,
    empty_selection,
    char_divides_n,
    not_irreducible_selection,
    non_integral_result,
    non_integral_average,
    divisibility_failed,
    shape_mismatch,
    precondition_failed,
    invalid_parameter,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace conorbit

#endif
