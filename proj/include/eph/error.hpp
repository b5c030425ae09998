#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eph {

enum class errc {
  sigma_mismatch,
  zero_divisor,
  arg_undefined,
  not_exactly_representable,
  zero_element,
  domain_error,
  ideal_point,
  factorization_fails,
  degenerate_point,
  flavor_mismatch,
  product_undefined,
  norm_undefined,
  division_by_zero,
  affine_undefined,
  not_in_subgroup,
  support_escaped,
  no_nontrivial_solution,
  property_violation,
  io_error,
};

constexpr std::string_view name(errc e) noexcept {
  switch (e) {
    case errc::sigma_mismatch: return "SigmaMismatch";
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::arg_undefined: return "ArgUndefined";
    case errc::not_exactly_representable: return "NotExactlyRepresentable";
    case errc::zero_element: return "ZeroElement";
    case errc::domain_error: return "DomainError";
    case errc::ideal_point: return "IdealPoint";
    case errc::factorization_fails: return "FactorizationFails";
    case errc::degenerate_point: return "DegeneratePoint";
    case errc::flavor_mismatch: return "FlavorMismatch";
    case errc::product_undefined: return "ProductUndefined";
    case errc::norm_undefined: return "NormUndefined";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::affine_undefined: return "AffineUndefined";
    case errc::not_in_subgroup: return "NotInSubgroup";
    case errc::support_escaped: return "SupportEscaped";
    case errc::no_nontrivial_solution: return "NoNontrivialSolution";
    case errc::property_violation: return "PropertyViolation";
    case errc::io_error: return "IOError";
  }
  return "Unknown";
}

// Every failure in the library is reported through this one type; the code
// tells callers which precondition broke.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(name(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace eph
