#include "gibbs/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "gibbs/errors.hpp"
#include "gibbs/quadrature.hpp"
#include "gibbs/stable.hpp"

namespace gibbs {

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) return -std::numeric_limits<double>::infinity();
    const double max = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(max)) return max;
    double sum = 0.0;
    for (double v : values) sum += std::exp(v - max);
    return max + std::log(sum);
}

namespace {

constexpr std::int64_t kChunkSize = 4096;

struct ChunkStats {
    double max = -std::numeric_limits<double>::infinity();
    double sum_shifted = 0.0;    // sum exp(v - max)
    double sum_shifted_sq = 0.0; // sum exp(2(v - max))
    std::uint64_t rejections = 0;
};

// v' = -tau X/Y per replicate; the constant part of the exponent is added
// after the reduction.
ChunkStats run_chunk(int n, int k, double alpha, double tau, RngStream rng,
                     std::int64_t count) {
    const StableIndex idx(alpha);
    ChunkStats stats;
    std::vector<double> draws(static_cast<std::size_t>(count));
    for (auto& v : draws) {
        const double y = sample_beta(k * alpha, n - k * alpha, rng);
        const double x = sample_poly_tilted_stable(idx, k, rng, &stats.rejections);
        v = -tau * x / y;
        stats.max = std::max(stats.max, v);
    }
    for (double v : draws) {
        const double e = std::exp(v - stats.max);
        stats.sum_shifted += e;
        stats.sum_shifted_sq += e * e;
    }
    return stats;
}

void run_chunks(int n, int k, double alpha, double tau, const RngStream& rng,
                std::int64_t m_samples, int workers, std::vector<ChunkStats>& out) {
    const std::int64_t n_chunks = (m_samples + kChunkSize - 1) / kChunkSize;
    out.resize(static_cast<std::size_t>(n_chunks));
    const auto run_range = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t c = lo; c < hi; ++c) {
            const std::int64_t count =
                std::min(kChunkSize, m_samples - c * kChunkSize);
            out[static_cast<std::size_t>(c)] = run_chunk(
                n, k, alpha, tau, rng.substream(static_cast<std::uint64_t>(c)),
                count);
        }
    };

    workers = std::max(1, std::min<int>(workers, static_cast<int>(n_chunks)));
    if (workers == 1) {
        run_range(0, n_chunks);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t per = (n_chunks + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = w * per;
        const std::int64_t hi = std::min(n_chunks, lo + per);
        if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
}

}  // namespace

VEstimate mc_log_v_ngg(int n, int k, double alpha, double tau, RngStream rng,
                       std::int64_t m_samples, int workers) {
    if (n < 1 || k < 1 || k > n)
        throw DomainError("mc_log_v_ngg: need 1 <= k <= n");
    StableIndex idx(alpha);
    if (!(tau >= 0.0)) throw DomainError("mc_log_v_ngg: tau must be >= 0");
    if (m_samples < 2)
        throw DomainError("mc_log_v_ngg: m_samples must be >= 2 (SE undefined)");

    const double constant = (k - 1) * std::log(alpha) + std::lgamma(k) -
                            std::lgamma(n) + std::pow(tau, alpha);
    if (tau == 0.0) return VEstimate{constant, 0.0, m_samples, 0};

    std::vector<ChunkStats> chunks;
    run_chunks(n, k, alpha, tau, rng, m_samples, workers, chunks);

    // fixed-order reduction: global max, then shifted sums chunk by chunk
    double global_max = -std::numeric_limits<double>::infinity();
    for (const auto& c : chunks) global_max = std::max(global_max, c.max);
    double s1 = 0.0, s2 = 0.0;
    std::uint64_t rejections = 0;
    for (const auto& c : chunks) {
        const double shift = std::exp(c.max - global_max);
        s1 += shift * c.sum_shifted;
        s2 += shift * shift * c.sum_shifted_sq;
        rejections += c.rejections;
    }

    const double m = static_cast<double>(m_samples);
    const double log_mean = global_max + std::log(s1) - std::log(m);
    // (SE/mean)^2 = (M r - 1)/(M - 1) with r = sum w^2 / (sum w)^2
    const double r = s2 / (s1 * s1);
    const double rel_var = std::max(0.0, (m * r - 1.0) / (m - 1.0));
    return VEstimate{constant + log_mean, std::sqrt(rel_var), m_samples, rejections};
}

McWeight mc_new_type_weight(int n, int k, double alpha, double tau, RngStream rng,
                            std::int64_t m_samples, int workers) {
    if (n < 1 || k < 1 || k > n)
        throw DomainError("mc_new_type_weight: need 1 <= k <= n");
    if (tau == 0.0)
        return McWeight{alpha * k / n, 0.0, true, 0};

    const VEstimate up =
        mc_log_v_ngg(n + 1, k, alpha, tau, rng.substream(1), m_samples, workers);
    const VEstimate lo =
        mc_log_v_ngg(n, k, alpha, tau, rng.substream(2), m_samples, workers);

    const double ratio = std::exp(up.log_value - lo.log_value);
    const double scale = (n - alpha * k) * ratio;
    McWeight w;
    w.estimate = 1.0 - scale;
    w.std_error = scale * std::hypot(up.log_std_error, lo.log_std_error);
    w.in_range = w.estimate > 0.0 && w.estimate < 1.0;
    w.rejection_count = up.rejection_count + lo.rejection_count;
    return w;
}

LogValue quadrature_v(int n, int k, const GibbsModel& model, double rel_tol,
                      int max_n) {
    if (n < 1 || k < 1 || k > n)
        throw DomainError("quadrature_v: need 1 <= k <= n");
    if (n > max_n)
        throw DomainError("quadrature_v: n=" + std::to_string(n) +
                          " beyond the desk-scale bound " + std::to_string(max_n));
    if (!(rel_tol > 0.0)) throw DomainError("quadrature_v: rel_tol must be > 0");

    const double alpha = model.alpha().value();
    const StableIndex idx = model.alpha();
    const double power = n - k * alpha;  // inner exponent parameter, > 0

    const auto inner = [&](double t) {
        const auto f = [&](double q) {
            const double p = std::pow(q, 1.0 / power);
            const double x = (1.0 - p) * t;
            if (!(x > 0.0)) return 0.0;
            return stable_pdf(x, idx, 1e-13);
        };
        const QuadratureResult r =
            integrate_adaptive(f, 0.0, 1.0, 1e-14, rel_tol * 0.05);
        return r.value / power;
    };

    const auto outer = [&](double u) {
        const double t = u / (1.0 - u);
        if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
        const double inner_value = inner(t);
        if (inner_value <= 0.0) return 0.0;
        const double jacobian = 1.0 / ((1.0 - u) * (1.0 - u));
        return inner_value * std::exp(model.log_h(t) - k * alpha * std::log(t)) *
               jacobian;
    };

    const QuadratureResult r =
        integrate_adaptive(outer, 0.0, 1.0, 1e-280, rel_tol * 0.5, 1500);
    if (!r.converged || !(r.value > 0.0))
        throw NumericError("quadrature_v: outer quadrature did not reach rel_tol",
                           r.value > 0.0 ? r.error / r.value : r.error);

    return LogValue::from_log(std::log(r.value) + k * std::log(alpha) -
                              std::lgamma(power));
}

}  // namespace gibbs
