#ifndef COXFLAG_ERROR_HPP_
#define COXFLAG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxflag {

  enum class ErrorCode {
    parse_error,
    invalid_letter,
    singleton_letter,
    not_reduced,
    not_reduced_concat,
    not_divisible,
    unsupported_shape,
    not_a_reduct,
    unknown_chamber,
    size_cap_exceeded,
    not_quasi_building,
    empty_seed,
    bad_schedule,
    disconnected,
    not_a_gamma_space,
    not_equivalent,
    no_path,
    not_a_permutation,
    budget_exceeded,
    not_a_flag,
    not_simply_connected,
    not_nice,
    no_edges
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail);

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace coxflag

#endif  // COXFLAG_ERROR_HPP_
