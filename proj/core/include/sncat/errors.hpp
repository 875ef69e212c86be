#ifndef SNCAT_ERRORS_HPP_
#define SNCAT_ERRORS_HPP_

#include <stdexcept>

namespace sncat {

  //! Operands live on ground sets of different sizes.
  class DimensionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  //! A size guard was exceeded, or a parameter is outside its domain.
  class RangeError : public std::out_of_range {
    using std::out_of_range::out_of_range;
  };

  //! An input claimed to be a (admissible) partial order is not one.
  class OrderError : public std::domain_error {
    using std::domain_error::domain_error;
  };

  //! An algebraic structure failed a check that the construction relies on
  //! (Eckmann-Hilton, idempotent shape, decomposition into basis classes).
  class AlgebraError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

}  // namespace sncat

#endif  // SNCAT_ERRORS_HPP_
