#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gibbs/approximation.hpp"
#include "gibbs/models.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

struct Observation {
    std::int64_t label = 0;
};

// Sufficient statistics of a sample: size n, number of distinct species k,
// and per-species frequencies. A value type; observe() returns a new state.
class PartitionState {
public:
    PartitionState() = default;

    // Builds a state from distinct labels and positive frequencies.
    static PartitionState from_counts(const std::vector<std::int64_t>& labels,
                                      const std::vector<std::int64_t>& frequencies);

    std::int64_t n() const { return n_; }
    int k() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::int64_t>& frequencies() const { return frequencies_; }
    const std::vector<std::int64_t>& labels() const { return labels_; }
    std::optional<int> index_of(std::int64_t label) const;
    // A label distinct from every observed one.
    std::int64_t fresh_label() const;

    friend PartitionState observe(const PartitionState& state, Observation obs);

private:
    std::int64_t n_ = 0;
    std::vector<std::int64_t> labels_;
    std::vector<std::int64_t> frequencies_;
    std::unordered_map<std::int64_t, int> index_;
};

// n is incremented; a known label bumps its frequency, an unseen one opens a
// new species with frequency 1.
PartitionState observe(const PartitionState& state, Observation obs);

enum class WeightBackend {
    kExact,
    kFirstOrder,
    kSecondOrderRational,
    kSecondOrderExpanded,
    kMonteCarlo,
};

struct PredictiveOptions {
    std::int64_t mc_samples = 10000;
    int precision_digits = 50;   // exact generalized-Gamma series
    double quad_rel_tol = 1e-8;  // exact generic models
    int quad_max_n = 30;         // desk-scale bound for quadrature
    int workers = 1;
};

// Predictive weights of the model given a state with n >= 1, k >= 1.
//
// kExact dispatches on the tilt family: the Poisson-Dirichlet closed form,
// the generalized-Gamma extended-precision series (PrecisionError from there
// carries the suggestion to retry with more digits or the Monte Carlo
// backend), the stable closed form, or 2-D quadrature for generic tilts.
// Exact weights are normalized by construction: the existing-type factor is
// the V ratio and the new-type mass is 1 - (n - k alpha) times it.
//
// kMonteCarlo needs an RngStream.
PredictiveWeights predictive_weights(const GibbsModel& model,
                                     const PartitionState& state,
                                     WeightBackend backend,
                                     const PredictiveOptions& options = {},
                                     RngStream* rng = nullptr);

// Draw the next observation: a fresh label with probability new_mass, else
// species i with probability existing_factor * (n_i - alpha). The weights
// must be normalized to 1e-9 (renormalize expanded-form weights first).
Observation sample_next(const PartitionState& state, const GibbsModel& model,
                        const PredictiveWeights& weights, RngStream& rng);

enum class TrajectorySource {
    kZeta,    // iid Zeta(sigma) labels
    kUrn,     // self-generated through the model's exact predictive rule
    kReplay,  // caller-provided label sequence (e.g. file data)
};

struct TrajectoryData {
    TrajectorySource source = TrajectorySource::kZeta;
    double zeta_sigma = 1.5;
    std::vector<std::int64_t> labels;  // kReplay only; needs >= n_max entries
};

struct TrajectoryCell {
    PredictiveWeights weights;
    bool skipped = false;  // exact backend beyond its n guard
    bool failed = false;   // exact series raised a precision diagnostic
    std::string error;
};

struct TrajectoryRow {
    int n = 0;
    int k = 0;
    std::vector<TrajectoryCell> cells;  // aligned with the backends argument
};

struct TrajectoryOptions {
    PredictiveOptions predictive;
    int exact_series_n_max = 100;  // exact generalized-Gamma cells beyond: skipped
};

// Feeds observations one at a time and records, after each of the first
// n_max observations, k_n and the new-type weight under every requested
// backend. Data, urn and per-step Monte Carlo draws run on disjoint
// sub-streams, so the table is a pure function of (inputs, seed).
std::vector<TrajectoryRow> run_trajectory(const GibbsModel& model,
                                          const TrajectoryData& data, int n_max,
                                          const std::vector<WeightBackend>& backends,
                                          const TrajectoryOptions& options,
                                          RngStream rng);

}  // namespace gibbs
