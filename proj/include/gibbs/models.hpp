#pragma once

#include <functional>
#include <variant>

#include "gibbs/log_value.hpp"
#include "gibbs/stable.hpp"

namespace gibbs {

// Tilting function h of the total stable mass, tagged by family. The closed
// forms below fix h up to the normalization that cancels in all V ratios:
//   Poisson-Dirichlet: h(t) = alpha Gamma(theta) / Gamma(theta/alpha) t^{-theta}
//   generalized Gamma: h(t) = exp(tau^alpha - tau t)
//   stable:            h(t) = 1
struct PoissonDirichletTilt {
    double theta;  // > -alpha
};
struct GeneralizedGammaTilt {
    double tau;  // >= 0
};
struct StableTilt {};
struct GenericTilt {
    std::function<double(double)> h;        // must be > 0 on (0, inf)
    std::function<double(double)> h_prime;  // derivative of h
};

using Tilt = std::variant<PoissonDirichletTilt, GeneralizedGammaTilt, StableTilt,
                          GenericTilt>;

class GibbsModel {
public:
    GibbsModel(StableIndex alpha, Tilt tilt);

    static GibbsModel poisson_dirichlet(double alpha, double theta);
    static GibbsModel generalized_gamma(double alpha, double tau);
    static GibbsModel stable(double alpha);
    static GibbsModel generic(double alpha, std::function<double(double)> h,
                              std::function<double(double)> h_prime);

    StableIndex alpha() const { return alpha_; }
    const Tilt& tilt() const { return tilt_; }

    // log h(t); the Poisson-Dirichlet branch handles theta <= 0 through the
    // sign cancellation of Gamma(theta)/Gamma(theta/alpha).
    double log_h(double t) const;

private:
    StableIndex alpha_;
    Tilt tilt_;
};

// phi_h(t) = -t h'(t) / h(t): theta for Poisson-Dirichlet, tau*t for the
// generalized Gamma family, 0 for the stable process.
double phi_h(const GibbsModel& model, double t);

// log V_{n,k} for the Poisson-Dirichlet prior,
//   V_{n,k} = prod_{i=0}^{k-1}(theta + i alpha) / (theta)_n,
// as a running sum of log factors. The leading factor theta is shared by
// numerator and denominator and cancelled analytically, so the whole range
// theta > -alpha is safe, including theta in (-alpha, 0].
LogValue pd_log_v(int n, int k, double alpha, double theta);

// log V_{n,k} for the generalized Gamma prior through the alternating series
//
//   V_{n,k} = alpha^{k-1} e^{tau^alpha} / Gamma(n)
//             * sum_{i=0}^{n-1} C(n-1,i) (-tau)^i Gamma(k - i/alpha, tau^alpha),
//
// evaluated in extended precision with `precision_digits` decimal digits.
// (The series follows from the one-dimensional integral form of V_{n,k},
//   V_{n,k} = alpha^k e^{tau^alpha}/Gamma(n) Int_0^inf l^{n-1} (l+tau)^{k alpha - n}
//             e^{-(l+tau)^alpha} dl,
// by substituting y = (l+tau)^alpha and expanding (y^{1/alpha} - tau)^{n-1};
// its tau = 0 limit is alpha^{k-1} Gamma(k)/Gamma(n).)
//
// The summands grow combinatorially while the sum stays small, so the
// routine tracks the largest summand and throws PrecisionError
// (kInsufficientDigits) when the result magnitude falls below
// 10^{-precision_digits/2} times that summand, rather than returning a
// cancellation artifact.
LogValue ngg_log_v_series(int n, int k, double alpha, double tau,
                          int precision_digits = 50);

// New-type predictive mass 1 - (n - alpha k) V_{n+1,k}/V_{n,k} for the
// generalized Gamma prior, from two series evaluations. Values outside
// (0,1) throw PrecisionError (kWeightOutOfRange); callers may raise
// precision_digits or fall back to the Monte Carlo backend.
double ngg_predictive_weight_exact(int n, int k, double alpha, double tau,
                                   int precision_digits = 50);

}  // namespace gibbs
