#include "gibbs/approximation.hpp"

#include <cmath>
#include <string>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

void check_state(int n, int k, const char* where) {
    if (n < 1 || k < 1 || k > n)
        throw DomainError(std::string(where) + ": need 1 <= k <= n");
}

}  // namespace

double beta_n(const GibbsModel& model, int n, int k) {
    check_state(n, k, "beta_n");
    const double t = n * std::pow(static_cast<double>(k), -1.0 / model.alpha().value());
    return phi_h(model, t);
}

PredictiveWeights first_order_weights(const GibbsModel& model, int n, int k) {
    check_state(n, k, "first_order_weights");
    const double alpha = model.alpha().value();
    return PredictiveWeights{k * alpha / n, 1.0 / n, WeightForm::kFirstOrder};
}

PredictiveWeights second_order_weights(const GibbsModel& model, int n, int k,
                                       SecondOrderForm form) {
    check_state(n, k, "second_order_weights");
    const double alpha = model.alpha().value();
    const double beta = beta_n(model, n, k);

    if (form == SecondOrderForm::kRational) {
        if (!(beta + n > 0.0))
            throw DomainError("second_order_weights: beta_n + n must be > 0");
        return PredictiveWeights{(beta + k * alpha) / (beta + n), 1.0 / (beta + n),
                                 WeightForm::kSecondOrderRational};
    }

    PredictiveWeights w;
    w.form = WeightForm::kSecondOrderExpanded;
    w.new_mass = k * alpha / n + beta / n;
    w.existing_factor = 1.0 / n - beta / (n * static_cast<double>(n));
    if (w.existing_factor < 0.0) {  // beta >= n
        w.existing_factor = 0.0;
        w.clamped = true;
    }
    if (w.new_mass > 1.0) {
        w.new_mass = 1.0;
        w.clamped = true;
    }
    return w;
}

}  // namespace gibbs
