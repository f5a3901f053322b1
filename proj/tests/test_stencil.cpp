#include <cmath>
#include <random>

#include "doctest.h"
#include "qadv/fft.hpp"
#include "qadv/stencil.hpp"

using namespace qadv;

namespace {
constexpr double kPi = 3.14159265358979323846;

// exact binomial via long double products (p <= 16 here)
long double binom(int n, int k) {
    long double v = 1.0L;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

double harmonic(int m) {
    double h = 0.0;
    for (int i = 1; i <= m; ++i) h += 1.0 / i;
    return h;
}
}  // namespace

TEST_CASE("alpha coefficients, small orders") {
    auto a1 = alpha_coefficients(1);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0] == doctest::Approx(1.0).epsilon(1e-15));

    auto a3 = alpha_coefficients(3);
    REQUIRE(a3.size() == 3);
    CHECK(a3[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(a3[1] == doctest::Approx(-0.6).epsilon(1e-15));
    CHECK(a3[2] == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("alpha matches the binomial identity at p=7") {
    // alpha_j = 2 (-1)^{j+1} C(2p, p+j) / C(2p, p), pinned by the exact p=1
    // and p=3 values
    const int p = 7;
    auto a = alpha_coefficients(p);
    for (int j = 1; j <= p; ++j) {
        double want = double((j % 2 ? 2.0L : -2.0L) * binom(2 * p, p + j) / binom(2 * p, p));
        CHECK(a[j - 1] == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("cp constant values and monotonicity") {
    CHECK(cp_constant(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cp_constant(3) == doctest::Approx(6.0 / 11.0).epsilon(1e-15));

    // p = 10 against direct summation
    auto a = alpha_coefficients(10);
    double inv = 0.0;
    for (int j = 1; j <= 10; ++j) inv += std::fabs(a[j - 1]) / j;
    CHECK(cp_constant(10) == doctest::Approx(1.0 / inv).epsilon(1e-15));

    double prev = 0.0;
    for (int p = 1; p <= 64; ++p) {
        double cinv = 1.0 / cp_constant(p);
        CHECK(cinv > prev);
        CHECK(cp_constant(p) <= 1.0 + 1e-15);
        prev = cinv;
    }
}

TEST_CASE("cp inverse grows like the harmonic numbers") {
    for (int p = 2; p <= 64; ++p) {
        double cinv = 1.0 / cp_constant(p);
        CHECK(cinv <= 2.0 * harmonic(p) + 1e-12);
        int r = int(std::floor(std::sqrt(double(p)))) - 1;
        if (r >= 1) CHECK(cinv >= (2.0 / std::exp(1.0)) * harmonic(r) - 1e-12);
    }
}

TEST_CASE("symbols vanish where they must") {
    auto g = GridSpec::make(4.0, 3);
    for (int p : {1, 2, 3}) {
        CHECK(lambda_k(p, g, 0) == 0.0);
        CHECK(mu_k(p, g, 0) == 0.0);
        CHECK(std::abs(lambda_k(p, g, g.N / 2)) < 1e-12);
    }
}

TEST_CASE("lambda hand value, p=1, N=8, d=4") {
    auto g = GridSpec::make(4.0, 3);
    // lambda_1 = sin(omega * dx) / dx with omega = pi/2, dx = 1/2
    CHECK(lambda_k(1, g, 1) == doctest::Approx(std::sin(kPi / 4.0) / 0.5).epsilon(1e-15));
}

TEST_CASE("symbol symmetry, periodicity, bounds, monotonicity") {
    auto g = GridSpec::make(4.0, 5);
    for (int p : {1, 2, 3, 5}) {
        for (long k = 0; k <= g.N / 2; ++k) {
            CHECK(lambda_k(p, g, -k) == doctest::Approx(-lambda_k(p, g, k)).epsilon(1e-12));
            CHECK(mu_k(p, g, -k) == doctest::Approx(mu_k(p, g, k)).epsilon(1e-12));
            CHECK(lambda_k(p, g, k + g.N) == doctest::Approx(lambda_k(p, g, k)).epsilon(1e-10));
            CHECK(lambda_k(p, g, k) >= -1e-10);
            CHECK(lambda_k(p, g, k) <= g.omega * k + 1e-10);
            CHECK(mu_k(p, g, k) >= -1e-10);
            CHECK(mu_k(p, g, k) <= g.omega * g.omega * double(k) * double(k) + 1e-8);
        }
        for (long k = 1; k <= g.N / 2; ++k)
            CHECK(mu_k(p, g, k) >= mu_k(p, g, k - 1) - 1e-9);
    }
}

TEST_CASE("symbol accuracy bounds") {
    for (int p : {1, 2, 3})
        for (int n : {4, 6}) {
            auto g = GridSpec::make(4.0, n);
            const double cp1 = accuracy_const_first(p);
            const double cp2 = accuracy_const_second(p);
            const double dx2p = std::pow(g.dx, 2 * p);
            for (long k = -g.N / 2; k <= g.N / 2; ++k) {
                const double wk = g.omega * double(k);
                CHECK(std::abs(wk - lambda_k(p, g, k)) <=
                      cp1 * std::pow(std::fabs(wk), 2 * p + 1) * dx2p + 1e-11);
                const double l = lambda_k(p, g, k);
                CHECK(std::abs(wk * wk - l * l) <=
                      2.0 * cp1 * std::pow(std::fabs(wk), 2 * p + 2) * dx2p + 1e-11);
                CHECK(std::abs(wk * wk - mu_k(p, g, k)) <=
                      cp2 * std::pow(std::fabs(wk), 2 * p + 2) * dx2p + 1e-11);
            }
        }
}

TEST_CASE("cosine identity for the stencil weights") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> hdist(-8.0, 8.0);
    for (int p = 1; p <= 8; ++p) {
        auto a = alpha_coefficients(p);
        const double c = double(std::pow(2.0L, 2 * p) / binom(2 * p, p));
        for (int trial = 0; trial < 100; ++trial) {
            double h = hdist(rng);
            double lhs = 0.0;
            for (int j = 1; j <= p; ++j) lhs += a[j - 1] * std::cos(j * h);
            double rhs = 1.0 - c * std::pow(std::sin(h / 2.0), 2 * p);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("dense first-derivative stencil, p=1") {
    auto g = GridSpec::make(4.0, 2);
    auto m = dense_operator(1, g, StencilOp::D2p);
    const double w = 1.0 / (2.0 * g.dx);
    for (long r = 0; r < g.N; ++r)
        for (long c = 0; c < g.N; ++c) {
            double want = 0.0;
            if ((c - r - 1) % g.N == 0) want = w;
            if ((c - r + 1) % g.N == 0) want = -w;
            CHECK(m[r * g.N + c] == doctest::Approx(want).epsilon(1e-14));
        }
}

TEST_CASE("dense second-derivative stencil, p=1") {
    auto g = GridSpec::make(4.0, 2);
    auto m = dense_operator(1, g, StencilOp::D2pSecond);
    const double w = 1.0 / (g.dx * g.dx);
    CHECK(m[0] == doctest::Approx(-2.0 * w));
    CHECK(m[1] == doctest::Approx(w));
    CHECK(m[3] == doctest::Approx(w));
}

TEST_CASE("fft diagonalization of the dense operator matches i*lambda_k") {
    const int p = 3, n = 5;
    auto g = GridSpec::make(4.0, n);
    auto m = dense_operator(p, g, StencilOp::D2p);
    const long N = g.N;
    for (long k = -N / 2; k < N / 2; ++k) {
        // apply to the mode column e_k and compare with i*lambda_k * e_k
        std::vector<cd> mode(N), out(N, 0.0);
        for (long j = 0; j < N; ++j) mode[j] = std::polar(1.0, g.omega * double(k) * double(j) * g.dx);
        for (long r = 0; r < N; ++r)
            for (long c = 0; c < N; ++c) out[r] += m[r * N + c] * mode[c];
        cd ev = cd(0.0, lambda_k(p, g, k));
        for (long j = 0; j < N; ++j) CHECK(std::abs(out[j] - ev * mode[j]) < 1e-12 * double(N));
    }
    // squared variant has eigenvalue -lambda_k^2, second variant -mu_k
    auto msq = dense_operator(p, g, StencilOp::D2pSquared);
    auto m2 = dense_operator(p, g, StencilOp::D2pSecond);
    for (long k : {1L, 5L, 9L}) {
        std::vector<cd> mode(N);
        for (long j = 0; j < N; ++j) mode[j] = std::polar(1.0, g.omega * double(k) * double(j) * g.dx);
        cd acc_sq = 0.0, acc_2 = 0.0;
        for (long c = 0; c < N; ++c) {
            acc_sq += msq[c] * mode[c];
            acc_2 += m2[c] * mode[c];
        }
        double l = lambda_k(p, g, k);
        CHECK(std::abs(acc_sq - cd(-l * l)) < 1e-10);
        CHECK(std::abs(acc_2 - cd(-mu_k(p, g, k))) < 1e-10);
    }
}

TEST_CASE("dense operator size guard") {
    CHECK_THROWS(dense_operator(1, GridSpec::make(4.0, 15), StencilOp::D2p));
}
