#include <doctest.h>

#include <cmath>
#include <vector>

#include "gibbs/errors.hpp"
#include "gibbs/rng.hpp"
#include "test_support.hpp"

using namespace gibbs;

TEST_SUITE_BEGIN("rng");

TEST_CASE("identical (seed, stream) reproduces identical sequences") {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different stream ids diverge") {
    RngStream a(42, 0), b(42, 1);
    int equal = 0;
    for (int i = 0; i < 64; ++i) equal += a.next_u64() == b.next_u64();
    CHECK(equal < 4);
}

TEST_CASE("uniform ranges") {
    RngStream rng(1);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform_open();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("substream is deterministic and independent of parent draws") {
    RngStream parent(9, 3);
    RngStream child_before = parent.substream(5);
    parent.next_u64();
    parent.next_u64();
    RngStream child_after = parent.substream(5);
    for (int i = 0; i < 16; ++i)
        CHECK(child_before.next_u64() == child_after.next_u64());
}

TEST_CASE("gamma and beta moments") {
    RngStream rng(2024);
    const int n = 100000;

    std::vector<double> gamma3(n), gamma_half(n), beta23(n);
    for (int i = 0; i < n; ++i) {
        gamma3[i] = sample_gamma(3.0, rng);
        gamma_half[i] = sample_gamma(0.5, rng);
        beta23[i] = sample_beta(2.0, 3.0, rng);
    }

    const auto g3 = testsupport::mean_and_se(gamma3);
    CHECK(std::fabs(g3.mean - 3.0) < 4.0 * g3.se);
    const auto gh = testsupport::mean_and_se(gamma_half);
    CHECK(std::fabs(gh.mean - 0.5) < 4.0 * gh.se);
    const auto b = testsupport::mean_and_se(beta23);
    CHECK(std::fabs(b.mean - 0.4) < 4.0 * b.se);
}

TEST_CASE("gamma rejects nonpositive shape") {
    RngStream rng(5);
    CHECK_THROWS_AS(sample_gamma(0.0, rng), DomainError);
    CHECK_THROWS_AS(sample_beta(1.0, -2.0, rng), DomainError);
}

TEST_SUITE_END();
