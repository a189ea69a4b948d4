#pragma once

#include <stdexcept>
#include <string>

namespace gibbs {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A numeric routine ran but could not reach the requested tolerance.
class NumericError : public Error {
public:
    NumericError(const std::string& what, double achieved_tolerance)
        : Error(what), achieved_tolerance_(achieved_tolerance) {}

    double achieved_tolerance() const { return achieved_tolerance_; }

private:
    double achieved_tolerance_;
};

// Extended-precision evaluation detected that the configured number of
// digits cannot support the requested computation. Recoverable: callers
// may retry with more digits or switch to the Monte Carlo backend.
class PrecisionError : public Error {
public:
    enum class Kind {
        kInsufficientDigits,  // alternating-series cancellation detector fired
        kWeightOutOfRange,    // predictive weight landed outside (0,1)
    };

    PrecisionError(Kind kind, const std::string& what, double value = 0.0)
        : Error(what), kind_(kind), value_(value) {}

    Kind kind() const { return kind_; }
    // The offending value, when kind == kWeightOutOfRange.
    double value() const { return value_; }

private:
    Kind kind_;
    double value_;
};

}  // namespace gibbs
