#pragma once

#include <cmath>
#include <limits>
#include <type_traits>

#include "gibbs/errors.hpp"
#include "gibbs/multiprecision.hpp"

namespace gibbs {

namespace detail {

template <class T>
T target_epsilon() {
    if constexpr (std::is_same_v<T, double>) {
        return std::numeric_limits<double>::epsilon();
    } else {
        return pow(T(10), -static_cast<int>(BigFloat::thread_default_precision()));
    }
}

template <class T>
T e1_of(const T& x) {
    if constexpr (std::is_same_v<T, double>) {
        return -std::expint(-x);
    } else {
        return exponential_integral_e1(x);
    }
}

// Lower incomplete gamma by its power series; wants b < a + 1.
template <class T>
T lower_gamma_series(const T& a, const T& b) {
    using std::abs;
    const T eps = target_epsilon<T>();
    T term = 1 / a;
    T sum = term;
    T denom = a;
    for (int j = 0; j < 100000; ++j) {
        denom += 1;
        term *= b / denom;
        sum += term;
        if (abs(term) < abs(sum) * eps) {
            using std::exp;
            using std::log;
            return sum * exp(a * log(b) - b);
        }
    }
    throw NumericError("lower_gamma_series: no convergence",
                       static_cast<double>(term / sum));
}

// Legendre continued fraction for Gamma(a,b), modified Lentz; wants b >= a + 1.
template <class T>
T upper_gamma_fraction(const T& a, const T& b) {
    using std::abs;
    using std::exp;
    using std::log;
    const T eps = target_epsilon<T>();
    const T tiny = T(1e-300);
    T c0 = b + 1 - a;
    T c = 1 / tiny;
    T d = 1 / c0;
    T h = d;
    for (int i = 1; i < 100000; ++i) {
        const T an = -T(i) * (T(i) - a);
        c0 += 2;
        d = an * d + c0;
        if (abs(d) < tiny) d = tiny;
        c = c0 + an / c;
        if (abs(c) < tiny) c = tiny;
        d = 1 / d;
        const T delta = d * c;
        h *= delta;
        if (abs(delta - 1) < eps) return exp(a * log(b) - b) * h;
    }
    throw NumericError("upper_gamma_fraction: no convergence", 0.0);
}

}  // namespace detail

// Upper incomplete gamma Gamma(a, b) = Int_b^inf x^{a-1} e^{-x} dx for any
// real a and b > 0. Positive a uses the classic series / continued-fraction
// split; a <= 0 walks the recurrence
//
//   Gamma(s - 1, b) = (Gamma(s, b) - b^{s-1} e^{-b}) / (s - 1)
//
// down from the anchor at the fractional part of a (or from Gamma(0, b) =
// E1(b) when a is an integer, where the recurrence divisor vanishes).
// Works for T = double and T = BigFloat at the current working precision.
template <class T>
T upper_incomplete_gamma(const T& a, const T& b) {
    using std::exp;
    using std::floor;
    using std::log;
    using std::tgamma;
    if (!(b > 0)) throw DomainError("upper_incomplete_gamma: b must be > 0");

    if (a > 0) {
        if (b < a + 1) return tgamma(a) - detail::lower_gamma_series(a, b);
        return detail::upper_gamma_fraction(a, b);
    }

    const T a_floor = floor(a);
    const bool integral = (a == a_floor);
    T s = integral ? T(0) : a - a_floor;  // anchor argument, in [0, 1)
    T value;
    if (integral) {
        value = detail::e1_of(b);
    } else if (b < s + 1) {
        value = tgamma(s) - detail::lower_gamma_series(s, b);
    } else {
        value = detail::upper_gamma_fraction(s, b);
    }

    const long steps = std::lround(static_cast<double>(s - a));
    T power = exp((s - 1) * log(b) - b);  // b^{s-1} e^{-b}, updated multiplicatively
    for (long j = 0; j < steps; ++j) {
        s -= 1;
        value = (value - power) / s;
        power /= b;
    }
    return value;
}

inline double upper_incomplete_gamma(double a, double b) {
    return upper_incomplete_gamma<double>(a, b);
}

}  // namespace gibbs
