#ifndef IKLAB_ERRORS_HPP
#define IKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iklab {

enum class Errc {
  non_monotone_capacities,
  non_positive_entry,
  length_mismatch,
  infeasible_schedule,
  index_out_of_range,
  capacity_negative,
  scale_overflow,
  epsilon_out_of_range,
  lp_numerical_failure,
  budget_exceeded,
  not_weight_constrained,
  not_two_periods,
  parameter_out_of_range,
  certificate_violation,
  file_not_found,
  parse_error,
  algorithm_precondition_failed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace iklab

#endif  // IKLAB_ERRORS_HPP
