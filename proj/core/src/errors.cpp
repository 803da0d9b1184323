#include "kelly/errors.hpp"

#include <sstream>

namespace kelly {

namespace {

std::string join_rows(const std::vector<RowError>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) os << "; ";
        os << "line " << rows[i].line << ": " << rows[i].reason;
    }
    return os.str();
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

NotFavorable::NotFavorable(double edge)
    : Error("game is not favorable (edge " + fmt_double(edge) + " <= 0)"), edge_(edge) {}

NonConvergence::NonConvergence(const std::string& what, double best_value, double error_estimate)
    : Error(what + " (best value " + fmt_double(best_value) + ", error estimate " +
            fmt_double(error_estimate) + ")"),
      best_value_(best_value),
      error_estimate_(error_estimate) {}

ConsistencyFailure::ConsistencyFailure(const std::string& what, double lhs, double rhs)
    : Error(what + ": " + fmt_double(lhs) + " vs " + fmt_double(rhs)), lhs_(lhs), rhs_(rhs) {}

ParseError::ParseError(std::vector<RowError> rows)
    : InvalidArgument(join_rows(rows)), rows_(std::move(rows)) {}

InfiniteMeanFit::InfiniteMeanFit(double alpha_hat)
    : InvalidArgument("fitted tail exponent " + fmt_double(alpha_hat) +
                      " <= 1 implies an infinite mean"),
      alpha_hat_(alpha_hat) {}

}  // namespace kelly
