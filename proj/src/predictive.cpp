#include "gibbs/predictive.hpp"

#include <algorithm>
#include <cmath>

#include "gibbs/errors.hpp"
#include "gibbs/montecarlo.hpp"
#include "gibbs/stable.hpp"

namespace gibbs {

PartitionState PartitionState::from_counts(
    const std::vector<std::int64_t>& labels,
    const std::vector<std::int64_t>& frequencies) {
    if (labels.size() != frequencies.size())
        throw DomainError("PartitionState: labels/frequencies size mismatch");
    PartitionState state;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (frequencies[i] < 1)
            throw DomainError("PartitionState: frequencies must be >= 1");
        if (!state.index_.emplace(labels[i], static_cast<int>(i)).second)
            throw DomainError("PartitionState: labels must be distinct");
        state.labels_.push_back(labels[i]);
        state.frequencies_.push_back(frequencies[i]);
        state.n_ += frequencies[i];
    }
    return state;
}

std::optional<int> PartitionState::index_of(std::int64_t label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t PartitionState::fresh_label() const {
    std::int64_t max = -1;
    for (std::int64_t l : labels_) max = std::max(max, l);
    return max + 1;
}

PartitionState observe(const PartitionState& state, Observation obs) {
    PartitionState next = state;
    next.n_ += 1;
    if (const auto idx = next.index_.find(obs.label); idx != next.index_.end()) {
        next.frequencies_[static_cast<std::size_t>(idx->second)] += 1;
    } else {
        next.index_.emplace(obs.label, next.k());
        next.labels_.push_back(obs.label);
        next.frequencies_.push_back(1);
    }
    return next;
}

namespace {

PredictiveWeights exact_weights(const GibbsModel& model, int n, int k,
                                const PredictiveOptions& options) {
    const double alpha = model.alpha().value();
    PredictiveWeights w;
    w.form = WeightForm::kExact;

    if (const auto* pd = std::get_if<PoissonDirichletTilt>(&model.tilt())) {
        w.new_mass = (pd->theta + k * alpha) / (pd->theta + n);
        w.existing_factor = 1.0 / (pd->theta + n);
        return w;
    }
    if (const auto* gg = std::get_if<GeneralizedGammaTilt>(&model.tilt())) {
        w.new_mass = ngg_predictive_weight_exact(n, k, alpha, gg->tau,
                                                 options.precision_digits);
        w.existing_factor = (1.0 - w.new_mass) / (n - k * alpha);
        return w;
    }
    if (std::holds_alternative<StableTilt>(model.tilt())) {
        w.new_mass = k * alpha / n;
        w.existing_factor = 1.0 / n;
        return w;
    }

    // generic tilt: two quadrature evaluations; new-type mass through the
    // whole-space identity so the pair stays exactly normalized
    const LogValue v = quadrature_v(n, k, model, options.quad_rel_tol,
                                    options.quad_max_n);
    const LogValue v_up = quadrature_v(n + 1, k, model, options.quad_rel_tol,
                                       options.quad_max_n);
    w.existing_factor = log_ratio_to_linear(v_up, v);
    w.new_mass = 1.0 - (n - k * alpha) * w.existing_factor;
    return w;
}

}  // namespace

PredictiveWeights predictive_weights(const GibbsModel& model,
                                     const PartitionState& state,
                                     WeightBackend backend,
                                     const PredictiveOptions& options,
                                     RngStream* rng) {
    const int n = static_cast<int>(state.n());
    const int k = state.k();
    if (n < 1 || k < 1)
        throw DomainError("predictive_weights: state must hold n >= 1, k >= 1");

    switch (backend) {
        case WeightBackend::kExact:
            return exact_weights(model, n, k, options);
        case WeightBackend::kFirstOrder:
            return first_order_weights(model, n, k);
        case WeightBackend::kSecondOrderRational:
            return second_order_weights(model, n, k, SecondOrderForm::kRational);
        case WeightBackend::kSecondOrderExpanded:
            return second_order_weights(model, n, k, SecondOrderForm::kExpanded);
        case WeightBackend::kMonteCarlo: {
            if (rng == nullptr)
                throw DomainError("predictive_weights: Monte Carlo backend needs rng");
            const auto* gg = std::get_if<GeneralizedGammaTilt>(&model.tilt());
            if (gg == nullptr)
                throw DomainError(
                    "predictive_weights: Monte Carlo backend covers the "
                    "generalized Gamma family only");
            const McWeight mc =
                mc_new_type_weight(n, k, model.alpha().value(), gg->tau, *rng,
                                   options.mc_samples, options.workers);
            PredictiveWeights w;
            w.form = WeightForm::kMonteCarlo;
            w.new_mass = mc.estimate;
            w.existing_factor = (1.0 - mc.estimate) / (n - k * model.alpha().value());
            w.std_error = mc.std_error;
            w.in_range = mc.in_range;
            return w;
        }
    }
    throw DomainError("predictive_weights: unknown backend");
}

Observation sample_next(const PartitionState& state, const GibbsModel& model,
                        const PredictiveWeights& weights, RngStream& rng) {
    const double alpha = model.alpha().value();
    const double n = static_cast<double>(state.n());
    const double k = static_cast<double>(state.k());
    const double defect =
        weights.new_mass + weights.existing_factor * (n - k * alpha) - 1.0;
    if (std::fabs(defect) > 1e-9)
        throw DomainError(
            "sample_next: weights are not normalized (defect " +
            std::to_string(defect) +
            "); renormalize expanded-form weights before sampling");

    const double u = rng.uniform();
    if (u < weights.new_mass) return Observation{state.fresh_label()};

    double cum = weights.new_mass;
    const auto& freqs = state.frequencies();
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const double mass = static_cast<double>(freqs[i]) - alpha;
        if (mass <= 0.0)
            throw Error("sample_next: species mass n_i - alpha <= 0");
        cum += weights.existing_factor * mass;
        if (u < cum) return Observation{state.labels()[i]};
    }
    return Observation{state.labels().back()};  // rounding spill-over
}

std::vector<TrajectoryRow> run_trajectory(const GibbsModel& model,
                                          const TrajectoryData& data, int n_max,
                                          const std::vector<WeightBackend>& backends,
                                          const TrajectoryOptions& options,
                                          RngStream rng) {
    if (n_max < 1) throw DomainError("run_trajectory: n_max must be >= 1");
    if (data.source == TrajectorySource::kReplay &&
        data.labels.size() < static_cast<std::size_t>(n_max))
        throw DomainError("run_trajectory: replay data shorter than n_max");

    RngStream data_rng = rng.substream(0);
    RngStream urn_rng = rng.substream(1);

    const bool is_gg = std::holds_alternative<GeneralizedGammaTilt>(model.tilt());
    const bool is_generic = std::holds_alternative<GenericTilt>(model.tilt());

    std::vector<TrajectoryRow> table;
    table.reserve(static_cast<std::size_t>(n_max));
    PartitionState state;

    for (int step = 1; step <= n_max; ++step) {
        Observation obs;
        switch (data.source) {
            case TrajectorySource::kZeta:
                obs.label = sample_zeta(data.zeta_sigma, data_rng);
                break;
            case TrajectorySource::kReplay:
                obs.label = data.labels[static_cast<std::size_t>(step - 1)];
                break;
            case TrajectorySource::kUrn:
                if (state.n() == 0) {
                    obs.label = 0;  // first draw from a nonatomic base measure
                } else {
                    const PredictiveWeights w = predictive_weights(
                        model, state, WeightBackend::kExact, options.predictive);
                    obs = sample_next(state, model, w, urn_rng);
                }
                break;
        }
        state = observe(state, obs);

        TrajectoryRow row;
        row.n = step;
        row.k = state.k();
        row.cells.reserve(backends.size());
        for (std::size_t b = 0; b < backends.size(); ++b) {
            TrajectoryCell cell;
            const WeightBackend backend = backends[b];
            const bool beyond_series_guard =
                backend == WeightBackend::kExact && is_gg &&
                step > options.exact_series_n_max;
            const bool beyond_quad_guard =
                backend == WeightBackend::kExact && is_generic &&
                step + 1 > options.predictive.quad_max_n;
            if (beyond_series_guard || beyond_quad_guard) {
                cell.skipped = true;
            } else {
                RngStream cell_rng = rng.substream(
                    1000 + 16 * static_cast<std::uint64_t>(step) + b);
                try {
                    cell.weights = predictive_weights(model, state, backend,
                                                      options.predictive, &cell_rng);
                } catch (const PrecisionError& e) {
                    cell.failed = true;
                    cell.error = e.what();
                }
            }
            row.cells.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace gibbs
