#include "qadv/stateprep.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qadv/stencil.hpp"

namespace qadv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTol = 1e-14;

int log2_exact(std::size_t n) {
    int m = 0;
    while ((std::size_t(1) << m) < n) ++m;
    if ((std::size_t(1) << m) != n) throw std::invalid_argument("prepare: length must be a power of two");
    return m;
}

// Multiplexed rotation on `target` selected by `selectors` (low-to-high
// significance), Gray-code ladder: 2^k rotations interleaved with 2^k CNOTs.
// emit(angle) appends the rotation gate for the running angle.
template <class Emit>
void multiplexed(Circuit& c, const std::vector<int>& selectors, std::span<const double> angles,
                 Emit&& emit_rotation, int target) {
    const std::size_t k = selectors.size();
    const std::size_t count = std::size_t(1) << k;
    if (angles.size() != count) throw std::logic_error("multiplexed: angle count");
    bool all_zero = true;
    for (double a : angles) all_zero &= std::fabs(a) < kTol;
    if (all_zero) return;
    if (k == 0) {
        emit_rotation(c, target, angles[0]);
        return;
    }
    // transformed angles: hat_i = 2^-k sum_c (-1)^{<gray(i), c>} a_c
    std::vector<double> hat(count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t gi = i ^ (i >> 1);
        double acc = 0.0;
        for (std::size_t cc = 0; cc < count; ++cc) {
            int par = std::popcount(gi & cc) & 1;
            acc += (par ? -angles[cc] : angles[cc]);
        }
        hat[i] = acc / double(count);
    }
    // ladder CNOTs are owed lazily; pairs around skipped zero rotations cancel
    std::size_t pending = 0;
    auto flush = [&] {
        for (std::size_t b = 0; b < k; ++b)
            if (pending >> b & 1) c.cx(selectors[b], target);
        pending = 0;
    };
    for (std::size_t i = 0; i < count; ++i) {
        if (std::fabs(hat[i]) >= kTol) {
            flush();
            emit_rotation(c, target, hat[i]);
        }
        std::size_t gnext = ((i + 1) & (count - 1)) ^ (((i + 1) & (count - 1)) >> 1);
        pending ^= (i ^ (i >> 1)) ^ gnext;
    }
    flush();
}

}  // namespace

Circuit prepare_amplitudes(std::span<const cd> v) {
    const int m = log2_exact(v.size());
    double nrm = 0.0;
    for (auto& a : v) nrm += std::norm(a);
    if (std::fabs(std::sqrt(nrm) - 1.0) > 1e-12) throw std::invalid_argument("prepare: input not normalized");

    Circuit c(std::max(m, 1));

    // magnitude tree: process qubit q from high to low; the rotation on q is
    // multiplexed over the qubits above it.
    std::vector<double> mag(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mag[i] = std::abs(v[i]);
    for (int q = m - 1; q >= 0; --q) {
        const std::size_t high_count = std::size_t(1) << (m - 1 - q);
        std::vector<double> angles(high_count, 0.0);
        for (std::size_t b = 0; b < high_count; ++b) {
            // norms of the two sub-blocks with qubit q = 0 / 1 under high bits b
            double n0 = 0.0, n1 = 0.0;
            const std::size_t lows = std::size_t(1) << q;
            for (std::size_t lo = 0; lo < lows; ++lo) {
                n0 += mag[lo | (b << (q + 1))] * mag[lo | (b << (q + 1))];
                n1 += mag[lo | (std::size_t(1) << q) | (b << (q + 1))] *
                      mag[lo | (std::size_t(1) << q) | (b << (q + 1))];
            }
            angles[b] = (n0 + n1 > 0.0) ? std::atan2(std::sqrt(n1), std::sqrt(n0)) : 0.0;
        }
        std::vector<int> selectors;
        for (int s = q + 1; s < m; ++s) selectors.push_back(s);
        multiplexed(c, selectors, angles,
                    [](Circuit& cc, int t, double a) { cc.rot_y(t, a); }, q);
    }

    // phase stage: residual phases as nested multiplexed z-rotations plus a
    // global phase
    std::vector<double> phi(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) phi[i] = (std::abs(v[i]) > kTol) ? std::arg(v[i]) : 0.0;
    std::vector<double> level = phi;
    for (int q = m - 1; q >= 0; --q) {
        const std::size_t half = std::size_t(1) << q;
        std::vector<double> diff(half), mean(half);
        for (std::size_t j = 0; j < half; ++j) {
            diff[j] = (level[j | half] - level[j]) / 2.0;
            mean[j] = (level[j | half] + level[j]) / 2.0;
        }
        // angles for qubit q are selected by the qubits below it
        std::vector<int> selectors;
        for (int s = 0; s < q; ++s) selectors.push_back(s);
        multiplexed(c, selectors, diff,
                    [](Circuit& cc, int t, double a) { cc.rot_z_exp(t, a); }, q);
        level = std::move(mean);
    }
    if (std::fabs(level[0]) >= kTol) c.global_phase(level[0]);
    return c;
}

std::vector<cd> sp_left_column(int p) {
    const int m = int(std::ceil(std::log2(2.0 * p + 1.0)));
    auto alpha = alpha_coefficients(p);
    const double cp = cp_constant(p);
    std::vector<cd> v(std::size_t(1) << m, 0.0);
    for (int j = 1; j <= p; ++j) {
        double wj = std::sqrt(cp * std::fabs(alpha[j - 1]) / (2.0 * j));
        v[p + j] += cd(0.0, wj);
        v[p - j] += cd(0.0, wj);
    }
    return v;
}

std::vector<cd> sp_right_column(int p) {
    const int m = int(std::ceil(std::log2(2.0 * p + 1.0)));
    auto alpha = alpha_coefficients(p);
    const double cp = cp_constant(p);
    std::vector<cd> v(std::size_t(1) << m, 0.0);
    for (int j = 1; j <= p; ++j) {
        double wj = std::sqrt(cp * std::fabs(alpha[j - 1]) / (2.0 * j));
        double sgn = (j % 2 == 1) ? 1.0 : -1.0;
        v[p + j] += sgn * wj;
        v[p - j] -= sgn * wj;
    }
    return v;
}

PreparationPair sp_pair(int p) {
    if (p < 1) throw std::invalid_argument("sp_pair: p must be positive");
    const int m = int(std::ceil(std::log2(2.0 * p + 1.0)));
    PreparationPair pair;
    pair.m = m;

    if (p == 1) {
        Circuit sl(2);
        sl.global_phase(kPi / 2.0);
        sl.h(1);
        Circuit sr(2);
        sr.x(1);
        sr.h(1);
        sr.x(1);
        pair.s_l = std::move(sl);
        pair.s_r = std::move(sr);
        return pair;
    }
    if (p == 3) {
        const double phi1 = std::asin(std::sqrt(9.0 / 11.0));
        const double phi2 = std::asin(std::sqrt(9.0 / 10.0));
        Circuit sl(3);
        sl.rot_y(1, phi1);
        sl.global_phase(kPi / 2.0);
        sl.add({GateKind::RotY, phi2, 0, {{1, 0}}});
        sl.h(2);
        sl.add({GateKind::X, 0.0, 1, {{0, 0}, {2, 1}}});
        Circuit sr(3);
        sr.rot_y(1, -phi1);
        sr.x(2);
        sr.add({GateKind::RotY, kPi - phi2, 0, {{1, 0}}});
        sr.h(2);
        sr.add({GateKind::X, 0.0, 1, {{0, 0}, {2, 1}}});
        pair.s_l = std::move(sl);
        pair.s_r = std::move(sr);
        return pair;
    }

    pair.s_l = prepare_amplitudes(sp_left_column(p));
    pair.s_r = prepare_amplitudes(sp_right_column(p));
    if (pair.s_l.num_qubits < m) pair.s_l.num_qubits = m;
    if (pair.s_r.num_qubits < m) pair.s_r.num_qubits = m;
    return pair;
}

}  // namespace qadv
