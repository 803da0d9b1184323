#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kelly {

// Root of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from the closest category.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range parameters, malformed specs.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InvalidDistribution : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InfiniteMean : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// f outside [0, 1).
class DomainError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InvalidOdds : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotFavorable : public Error {
public:
    explicit NotFavorable(double edge);
    double edge() const noexcept { return edge_; }

private:
    double edge_;
};

// Quadrature or root finding ran out of budget. Carries the best value seen.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double best_value, double error_estimate);
    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

// Two routes that must agree did not.
class ConsistencyFailure : public Error {
public:
    ConsistencyFailure(const std::string& what, double lhs, double rhs);
    double lhs() const noexcept { return lhs_; }
    double rhs() const noexcept { return rhs_; }

private:
    double lhs_;
    double rhs_;
};

class IoError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

struct RowError {
    std::size_t line = 0;
    std::string reason;
};

class ParseError : public InvalidArgument {
public:
    explicit ParseError(std::vector<RowError> rows);
    const std::vector<RowError>& rows() const noexcept { return rows_; }

private:
    std::vector<RowError> rows_;
};

class EmptyFile : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DegenerateSample : public Error {
public:
    using Error::Error;
};

class InsufficientTail : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InfiniteMeanFit : public InvalidArgument {
public:
    InfiniteMeanFit(double alpha_hat);
    double alpha_hat() const noexcept { return alpha_hat_; }

private:
    double alpha_hat_;
};

}  // namespace kelly
