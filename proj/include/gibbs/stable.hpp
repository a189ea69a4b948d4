#pragma once

#include <cstdint>

#include "gibbs/rng.hpp"

namespace gibbs {

// Stability index restricted to the strictly positive, strictly sub-1 range
// where the one-sided stable law exists. All densities and samplers below
// use the normalization with Laplace transform E[exp(-s T)] = exp(-s^alpha).
class StableIndex {
public:
    explicit StableIndex(double alpha);
    double value() const { return alpha_; }

private:
    double alpha_;
};

// Density f_alpha of the positive alpha-stable law, evaluated through the
// single-integral (Zolotarev) representation
//
//   f_alpha(x) = alpha / ((1-alpha) pi) * x^{-1/(1-alpha)}
//                * Int_0^pi A(u) exp(-A(u) x^{-alpha/(1-alpha)}) du,
//   A(u) = [ sin(alpha u)^alpha sin((1-alpha)u)^{1-alpha} / sin(u) ]^{1/(1-alpha)},
//
// with adaptive Gauss-Kronrod quadrature to absolute tolerance abs_tol.
// Throws DomainError for x <= 0, NumericError (carrying the achieved
// tolerance) if the quadrature does not converge.
double stable_pdf(double x, StableIndex alpha, double abs_tol = 1e-10);

// Zolotarev's A(u) on log scale; exposed for tests.
double stable_log_zolotarev_a(double u, StableIndex alpha);

// Kanter's exact sampler: T = (A(pi U) / E)^{(1-alpha)/alpha}.
double sample_positive_stable(StableIndex alpha, RngStream& rng);

// Draw from the exponentially tilted stable density
//   exp(tilt^alpha - tilt * x) f_alpha(x).
//
// Rejection from the untilted law, split into m = ceil(tilt^alpha) components
// by infinite divisibility so the per-proposal acceptance stays >= exp(-1);
// total work grows linearly in tilt^alpha. tilt = 0 falls through to the
// untilted sampler unchanged.
//
// When `rejections` is given it accumulates the number of stable proposals
// consumed in excess of one per returned draw, i.e. the extra work
// attributable to the tilt; draws/(draws + rejections) is the per-proposal
// acceptance rate. Tilts above 1e8 are rejected as pathological.
double sample_exp_tilted_stable(StableIndex alpha, double tilt, RngStream& rng,
                                std::uint64_t* rejections = nullptr);

// Draw from the polynomially tilted stable density
//   Gamma(k alpha + 1) / Gamma(k + 1) * x^{-k alpha} f_alpha(x)
// via the Gamma augmentation: G ~ Gamma(k, 1), then an exponential tilt with
// random rate G^{1/alpha}. The augmentation may legitimately produce rates
// beyond the public guardrail, so it bypasses that check.
double sample_poly_tilted_stable(StableIndex alpha, int k, RngStream& rng,
                                 std::uint64_t* rejections = nullptr);

// Exact Zeta(sigma) draw, Pr(Z = z) proportional to z^{-sigma}, by
// rejection-inversion from a Pareto envelope (no support truncation other
// than the int64 range, whose tail mass is < 1e-9 per draw at sigma = 1.5).
// Requires sigma > 1.
std::int64_t sample_zeta(double sigma, RngStream& rng);

}  // namespace gibbs
