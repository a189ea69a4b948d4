#pragma once

#include <cstdint>
#include <span>

#include "gibbs/log_value.hpp"
#include "gibbs/models.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

// One Monte Carlo evaluation of V_{n,k}, kept on the log scale.
struct VEstimate {
    double log_value = 0.0;
    double log_std_error = 0.0;  // delta-method SE of log_value
    std::int64_t samples = 0;
    std::uint64_t rejection_count = 0;  // extra stable proposals consumed
};

// Overflow-free log(sum_i exp(v_i)); -inf for an empty span.
double log_sum_exp(std::span<const double> values);

// Monte Carlo estimate of log V_{n,k} for the generalized Gamma prior from
// the ratio representation
//
//   V_{n,k} = alpha^{k-1} Gamma(k)/Gamma(n) * E[exp(tau^alpha - tau X/Y)],
//   Y ~ Beta(k alpha, n - k alpha),  X ~ polynomially tilted stable,
//
// averaging the replicates through a log-sum-exp reduction (the exponents
// never reach linear scale individually). The standard error is the
// delta-method SE of the log estimate; the ratio estimator it feeds has
// O(1/M) bias, so M stays configurable.
//
// Replicates are processed in fixed chunks of 4096, each on its own
// sub-stream, and reduced in chunk order: the result is bit-identical for
// any worker count. Requires m_samples >= 2.
VEstimate mc_log_v_ngg(int n, int k, double alpha, double tau, RngStream rng,
                       std::int64_t m_samples = 10000, int workers = 1);

struct McWeight {
    double estimate = 0.0;
    double std_error = 0.0;
    bool in_range = true;  // false when the estimate fell outside (0,1)
    std::uint64_t rejection_count = 0;
};

// New-type predictive mass 1 - (n - alpha k) V_{n+1,k}/V_{n,k}, the two V's
// estimated on independent sub-streams (no common random numbers). Small M
// can push the estimate outside (0,1); it is returned as-is with in_range
// cleared. tau = 0 degenerates to exactly k alpha / n with zero error.
McWeight mc_new_type_weight(int n, int k, double alpha, double tau, RngStream rng,
                            std::int64_t m_samples = 10000, int workers = 1);

// Deterministic cross-check of V_{n,k} for any model: adaptive 2-D
// quadrature of
//
//   V_{n,k} = alpha^k / Gamma(n - k alpha)
//             * Int_0^inf Int_0^1 t^{-k alpha} p^{n-k alpha-1} h(t)
//                         f_alpha((1-p) t) dp dt,
//
// outer integral mapped through t = u/(1-u), inner one with the p-power
// singularity absorbed exactly by p = q^{1/(n-k alpha)}. Desk-scale only:
// n above max_n is refused. Throws NumericError with the achieved tolerance
// when rel_tol is out of reach.
LogValue quadrature_v(int n, int k, const GibbsModel& model,
                      double rel_tol = 1e-8, int max_n = 30);

}  // namespace gibbs
