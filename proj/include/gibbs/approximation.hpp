#pragma once

#include "gibbs/models.hpp"

namespace gibbs {

enum class WeightForm {
    kExact,
    kFirstOrder,
    kSecondOrderRational,
    kSecondOrderExpanded,
    kMonteCarlo,
};

// The pair defining a predictive rule: a new species appears with
// probability new_mass, existing species i with probability
// existing_factor * (n_i - alpha). Exact, first-order and rational
// second-order forms satisfy new_mass + (n - k alpha) existing_factor = 1;
// the expanded second-order form overshoots by exactly k alpha beta_n / n^2
// unless the clamp fired.
struct PredictiveWeights {
    double new_mass = 0.0;
    double existing_factor = 0.0;
    WeightForm form = WeightForm::kExact;
    bool clamped = false;    // expanded form hit a range clamp
    bool in_range = true;    // Monte Carlo estimate landed inside (0,1)
    double std_error = 0.0;  // Monte Carlo only
};

// Second-order coefficient beta_n = phi_h(n k^{-1/alpha}): theta for
// Poisson-Dirichlet, tau n / k^{1/alpha} for generalized Gamma, 0 for stable.
double beta_n(const GibbsModel& model, int n, int k);

// (k alpha / n, 1/n): the predictive rule of the normalized stable process.
// Depends on the model's tilt in no way at all.
PredictiveWeights first_order_weights(const GibbsModel& model, int n, int k);

enum class SecondOrderForm { kRational, kExpanded };

// Second-order approximations built from beta = beta_n(model, n, k):
//   rational:  ((beta + k alpha)/(beta + n), 1/(beta + n)) -- always
//              normalized, and exact for Poisson-Dirichlet models;
//   expanded:  (k alpha/n + beta/n, 1/n - beta/n^2) -- the two-term
//              decomposition; when beta >= n the existing factor is clamped
//              at 0 (and new_mass at 1) with `clamped` set.
PredictiveWeights second_order_weights(const GibbsModel& model, int n, int k,
                                       SecondOrderForm form = SecondOrderForm::kRational);

}  // namespace gibbs
