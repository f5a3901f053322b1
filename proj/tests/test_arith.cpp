#include <cmath>
#include <tuple>

#include "doctest.h"
#include "qadv/arith.hpp"
#include "qadv/statevector.hpp"

using namespace qadv;

namespace {
constexpr double kPi = 3.14159265358979323846;

cd entry(const std::vector<cd>& u, int dim, int r, int c) { return u[std::size_t(r) * dim + c]; }
}  // namespace

TEST_CASE("qft(1) is H") {
    auto u = dense_unitary(qft_circuit(1));
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(u[0] - is2) < 1e-15);
    CHECK(std::abs(u[1] - is2) < 1e-15);
    CHECK(std::abs(u[2] - is2) < 1e-15);
    CHECK(std::abs(u[3] + is2) < 1e-15);
}

TEST_CASE("qft|0> is the uniform positive superposition") {
    auto s = apply_circuit(Statevector::zero_state(4), qft_circuit(4));
    for (auto& a : s.amp) CHECK(std::abs(a - 0.25) < 1e-13);
}

TEST_CASE("qft(3) matches the +i DFT matrix exactly") {
    auto u = dense_unitary(qft_circuit(3));
    const int N = 8;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            cd want = std::polar(1.0 / std::sqrt(8.0), 2.0 * kPi * j * k / 8.0);
            CHECK(std::abs(entry(u, N, j, k) - want) < 1e-12);
        }
}

TEST_CASE("qft rejects n = 0") { CHECK_THROWS(qft_circuit(0)); }

TEST_CASE("r_power l=0 gives identity phases") {
    Circuit c = r_power_circuit(3, 0);
    REQUIRE(c.gates.size() == 3);
    for (auto& g : c.gates) {
        CHECK(g.kind == GateKind::Phase);
        CHECK(g.param == 0.0);
    }
}

TEST_CASE("r_power n=1 l=1 is Z") {
    auto u = dense_unitary(r_power_circuit(1, 1));
    CHECK(std::abs(u[0] - 1.0) < 1e-15);
    CHECK(std::abs(u[3] + 1.0) < 1e-15);
}

TEST_CASE("r_power diagonal action") {
    // n=3, l=3: entry at k=5 is exp(2 pi i * 15 / 8)
    auto s = apply_circuit(Statevector::basis(3, 5), r_power_circuit(3, 3));
    CHECK(std::abs(s.amp[5] - std::polar(1.0, 2.0 * kPi * 15.0 / 8.0)) < 1e-13);
    // dense check of the full definition
    for (long k = 0; k < 8; ++k) {
        auto t = apply_circuit(Statevector::basis(3, k), r_power_circuit(3, 3));
        CHECK(std::abs(t.amp[k] - std::polar(1.0, 2.0 * kPi * double(k) * 3.0 / 8.0)) < 1e-13);
    }
}

TEST_CASE("phase adder smallest case") {
    // (m=1,n=1,l=0): |1>|1> -> e^{i pi} |1>|1>; control is the high qubit
    auto s = apply_circuit(Statevector::basis(2, 3), phase_adder_circuit({1, 1, 0}));
    CHECK(std::abs(s.amp[3] - std::polar(1.0, kPi)) < 1e-14);
}

TEST_CASE("phase adder matches the worked (2,3,3) layout") {
    Circuit c = phase_adder_circuit({2, 3, 3});
    // controlled-phase ladder
    std::vector<std::tuple<int, int, double>> cps;  // control, target, angle
    std::vector<std::pair<int, double>> ps;         // target, angle
    for (auto& g : c.gates) {
        REQUIRE(g.kind == GateKind::Phase);
        if (g.controls.size() == 1)
            cps.emplace_back(g.controls[0].first, g.target, g.param);
        else
            ps.emplace_back(g.target, g.param);
    }
    std::vector<std::tuple<int, int, double>> want_cps = {
        {3, 0, kPi / 4}, {3, 1, kPi / 2}, {3, 2, kPi}, {4, 0, kPi / 2}, {4, 1, kPi}};
    std::vector<std::pair<int, double>> want_ps = {{0, 3 * kPi / 4}, {1, 3 * kPi / 2}, {2, 3 * kPi}};
    CHECK(cps == want_cps);
    // R^3 layer angles are reduced mod 2 pi at synthesis
    REQUIRE(ps.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(ps[i].first == want_ps[i].first);
        double diff = std::remainder(ps[i].second - want_ps[i].second, 2.0 * kPi);
        CHECK(std::abs(diff) < 1e-13);
    }
}

TEST_CASE("phase adder dense diagonal action") {
    // |j>|k> -> exp(2 pi i k (j + l) / 2^n) |j>|k> for m=2, n=3, l=-1
    Circuit c = phase_adder_circuit({2, 3, -1});
    for (long j = 0; j < 4; ++j)
        for (long k = 0; k < 8; ++k) {
            auto s = apply_circuit(Statevector::basis(5, (j << 3) | k), c);
            cd want = std::polar(1.0, 2.0 * kPi * double(k) * double(j - 1) / 8.0);
            CHECK(std::abs(s.amp[(j << 3) | k] - want) < 1e-12);
        }
}

TEST_CASE("phase adder two-qubit gate count identity") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            auto r = raw_census(phase_adder_circuit({m, n, 2}));
            CHECK(r.two_qubit == n * m - m * (m - 1) / 2);
            CHECK(r.multi == 0);
        }
}

TEST_CASE("modular adder wraps around") {
    // (m=1,n=2,l=0): |1>|3> -> |1>|0>
    auto s = apply_circuit(Statevector::basis(3, (1 << 2) | 3), modular_adder_circuit({1, 2, 0}));
    CHECK(std::abs(s.amp[(1 << 2) | 0] - 1.0) < 1e-12);
    // (m=2,n=3,l=-3): |2>|1> -> |2>|0>
    auto t = apply_circuit(Statevector::basis(5, (2 << 3) | 1), modular_adder_circuit({2, 3, -3}));
    CHECK(std::abs(t.amp[(2 << 3) | 0] - 1.0) < 1e-12);
}

TEST_CASE("modular adder equals the classical addition table") {
    Circuit c = modular_adder_circuit({2, 3, 5});
    for (long j = 0; j < 4; ++j)
        for (long k = 0; k < 8; ++k) {
            auto s = apply_circuit(Statevector::basis(5, (j << 3) | k), c);
            long want = (j << 3) | ((k + j + 5) & 7);
            CHECK(std::abs(s.amp[want] - 1.0) < 1e-11);
            double rest = 0.0;
            for (long i = 0; i < 32; ++i)
                if (i != want) rest += std::norm(s.amp[i]);
            CHECK(rest < 1e-20);
        }
}

TEST_CASE("modular adder has order 2^n on the target register") {
    Circuit c = modular_adder_circuit({1, 3, 0});
    Circuit repeated(4);
    for (int r = 0; r < 8; ++r) repeated.append(c);
    // |1>|k> advances by one per application; 8 applications return to start
    for (long k = 0; k < 8; ++k) {
        auto s = apply_circuit(Statevector::basis(4, (1 << 3) | k), repeated);
        CHECK(std::abs(s.amp[(1 << 3) | k] - 1.0) < 1e-10);
    }
}

TEST_CASE("translation is Fourier-diagonalized with entries exp(2 pi i k / N)") {
    // R = F T F^dagger as dense matrices, n <= 5
    for (int n = 2; n <= 5; ++n) {
        const int N = 1 << n;
        // plain T: modular adder with the single control held in |1> and l = 0
        Circuit shift = modular_adder_circuit({1, n, 0});
        Circuit f = qft_circuit(n);
        // conjugate: F . T . F^dagger applied to target register only
        for (long k = 0; k < N; ++k) {
            Statevector s = Statevector::basis(n + 1, (1L << n) | k);
            std::vector<int> id(n);
            for (int i = 0; i < n; ++i) id[i] = i;
            apply_in_place(s, remap_qubits(f.adjoint(), id, n + 1));
            apply_in_place(s, shift);
            apply_in_place(s, remap_qubits(f, id, n + 1));
            cd want = std::polar(1.0, 2.0 * kPi * double(k) / double(N));
            CHECK(std::abs(s.amp[(1L << n) | k] - want) < 1e-11);
        }
    }
}
