#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace gibbs {

// Arbitrary-precision real with runtime-settable decimal precision.
using BigFloat = boost::multiprecision::mpfr_float;

// Scoped change of the thread-local working precision (decimal digits).
// Extended-precision evaluations construct one of these per call so that
// concurrent callers with different digit counts never interfere.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(BigFloat::thread_default_precision()) {
        BigFloat::thread_default_precision(digits10);
    }
    ~PrecisionGuard() { BigFloat::thread_default_precision(saved_); }

    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// E1(x) = -Ei(-x) for x > 0; MPFR only ships Ei.
inline BigFloat exponential_integral_e1(const BigFloat& x) {
    BigFloat result;
    const BigFloat neg = -x;
    mpfr_eint(result.backend().data(), neg.backend().data(), MPFR_RNDN);
    return -result;
}

}  // namespace gibbs
