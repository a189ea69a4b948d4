#pragma once

#include <cmath>

namespace gibbs {

// A signed quantity stored as sign * exp(log_magnitude). Partition weights
// V_{n,k} underflow double precision long before n reaches experiment sizes,
// so all V values move through the library in this form and only ratios are
// ever exponentiated.
struct LogValue {
    double log_magnitude = 0.0;
    int sign = +1;  // +1 or -1; valid V values always carry +1

    static LogValue from_log(double log_mag, int sign = +1) {
        return LogValue{log_mag, sign >= 0 ? +1 : -1};
    }

    double value() const { return sign * std::exp(log_magnitude); }
};

// exp(a - b) with signs; the only way log-scale values become linear here.
inline double log_ratio_to_linear(const LogValue& a, const LogValue& b) {
    return a.sign * b.sign * std::exp(a.log_magnitude - b.log_magnitude);
}

}  // namespace gibbs
