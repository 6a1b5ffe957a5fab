#include "iklab/errors.hpp"

namespace iklab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_monotone_capacities: return "NonMonotoneCapacities";
    case Errc::non_positive_entry: return "NonPositiveEntry";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::infeasible_schedule: return "InfeasibleSchedule";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::capacity_negative: return "CapacityNegative";
    case Errc::scale_overflow: return "ScaleOverflow";
    case Errc::epsilon_out_of_range: return "EpsilonOutOfRange";
    case Errc::lp_numerical_failure: return "LpNumericalFailure";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_weight_constrained: return "NotWeightConstrained";
    case Errc::not_two_periods: return "NotTwoPeriods";
    case Errc::parameter_out_of_range: return "ParameterOutOfRange";
    case Errc::certificate_violation: return "CertificateViolation";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::parse_error: return "ParseError";
    case Errc::algorithm_precondition_failed: return "AlgorithmPreconditionFailed";
  }
  return "UnknownError";
}

}  // namespace iklab
