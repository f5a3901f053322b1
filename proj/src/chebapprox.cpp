#include "qadv/chebapprox.hpp"

#include <cmath>
#include <stdexcept>

namespace qadv {

double ChebPoly::eval(double x) const {
    double b1 = 0.0, b2 = 0.0;
    for (int k = int(coeffs.size()) - 1; k >= 1; --k) {
        double b0 = coeffs[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return (coeffs.empty() ? 0.0 : coeffs[0]) + x * b1 - b2;
}

bool ChebPoly::is_zero(double tol) const {
    for (double c : coeffs)
        if (std::fabs(c) > tol) return false;
    return true;
}

void ChebPoly::scale(double s) {
    for (double& c : coeffs) c *= s;
}

ChebPoly cheb_mul(const ChebPoly& a, const ChebPoly& b) {
    ChebPoly r;
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t m = 0; m < a.coeffs.size(); ++m) {
        if (a.coeffs[m] == 0.0) continue;
        for (std::size_t n = 0; n < b.coeffs.size(); ++n) {
            const double w = 0.5 * a.coeffs[m] * b.coeffs[n];
            r.coeffs[m + n] += w;
            r.coeffs[m >= n ? m - n : n - m] += w;
        }
    }
    if (a.parity == Parity::None || b.parity == Parity::None)
        r.parity = Parity::None;
    else if (a.parity == b.parity)
        r.parity = Parity::Even;
    else
        r.parity = Parity::Odd;
    return r;
}

namespace {

// Miller downward recurrence; ratio[k] holds the unnormalized f_k sequence.
// Returns f_n / norm where norm is built by `accumulate`.
struct MillerResult {
    double value = 0.0;
    double norm = 0.0;
};

constexpr double kRescaleLimit = 1e250;

int miller_start(int n, double x) {
    int m = std::max(n, int(std::ceil(x)));
    m += 20 + int(2.0 * std::sqrt(double(m)));
    return (m % 2 == 0) ? m : m + 1;
}

}  // namespace

double bessel_j(int n, double x) {
    if (n < 0 || n > 4000 || x < 0.0 || x > 2000.0) throw std::invalid_argument("bessel_j: out of range");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    const int start = miller_start(n, x);
    double fkp1 = 0.0, fk = 1e-30;
    double target = 0.0;
    double norm = 0.0;  // J_0 + 2 sum_{k even >= 2} J_k = 1
    for (int k = start; k >= 1; --k) {
        double fkm1 = (2.0 * k / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;
        if (k - 1 == n) target = fk;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? fk : 2.0 * fk;
        if (std::fabs(fk) > kRescaleLimit) {
            fk /= kRescaleLimit;
            fkp1 /= kRescaleLimit;
            target /= kRescaleLimit;
            norm /= kRescaleLimit;
        }
    }
    return target / norm;
}

double bessel_i_scaled(int n, double x) {
    if (n < 0 || n > 4000 || x < 0.0 || x > 2000.0) throw std::invalid_argument("bessel_i: out of range");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    const int start = miller_start(n, x);
    double fkp1 = 0.0, fk = 1e-30;
    double target = 0.0;
    double norm = 0.0;  // e^{-x} (I_0 + 2 sum_{k>=1} I_k) = 1
    for (int k = start; k >= 1; --k) {
        double fkm1 = (2.0 * k / x) * fk + fkp1;
        fkp1 = fk;
        fk = fkm1;
        if (k - 1 == n) target = fk;
        norm += (k - 1 == 0) ? fk : 2.0 * fk;
        if (std::fabs(fk) > kRescaleLimit) {
            fk /= kRescaleLimit;
            fkp1 /= kRescaleLimit;
            target /= kRescaleLimit;
            norm /= kRescaleLimit;
        }
    }
    return target / norm;
}

double bessel_i(int n, double x) { return bessel_i_scaled(n, x) * std::exp(x); }

ChebPoly cos_trunc(double M, int R) {
    if (M < 0.0 || R < 0) throw std::invalid_argument("cos_trunc: bad arguments");
    ChebPoly p;
    p.parity = Parity::Even;
    p.coeffs.assign(2 * R + 1, 0.0);
    p.coeffs[0] = bessel_j(0, M);
    for (int k = 1; k <= R; ++k) p.coeffs[2 * k] = 2.0 * ((k % 2) ? -1.0 : 1.0) * bessel_j(2 * k, M);
    return p;
}

ChebPoly sin_trunc(double M, int R) {
    if (M < 0.0 || R < 0) throw std::invalid_argument("sin_trunc: bad arguments");
    ChebPoly p;
    p.parity = Parity::Odd;
    p.coeffs.assign(2 * R + 2, 0.0);
    for (int k = 0; k <= R; ++k) p.coeffs[2 * k + 1] = 2.0 * ((k % 2) ? -1.0 : 1.0) * bessel_j(2 * k + 1, M);
    return p;
}

ChebPoly gauss_trunc(double M, int R) {
    if (M < 0.0 || R < 0) throw std::invalid_argument("gauss_trunc: bad arguments");
    ChebPoly p;
    p.parity = Parity::Even;
    p.coeffs.assign(2 * R + 1, 0.0);
    p.coeffs[0] = bessel_i_scaled(0, M / 2.0);
    for (int k = 1; k <= R; ++k)
        p.coeffs[2 * k] = 2.0 * ((k % 2) ? -1.0 : 1.0) * bessel_i_scaled(k, M / 2.0);
    return p;
}

double solve_r(double M, double eps) {
    if (!(M > 0.0) || !(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("solve_r: domain");
    const double L = std::log(1.0 / eps);
    auto g = [&](double r) { return r * std::log(r / M) - L; };
    double lo = M;
    double hi = std::max(M * std::exp(1.0), M + 1.0);
    while (g(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-13 * hi) break;
    }
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        double h = g(r), dh = std::log(r / M) + 1.0;
        if (dh <= 0.0) break;
        r -= h / dh;
        if (r <= M) r = std::nextafter(M, 2.0 * M + 1.0);
    }
    return r;
}

DegreePlan plan_degrees(double M1, double M2, double eps_uniform) {
    if (M1 < 0.0 || M2 < 0.0) throw std::invalid_argument("plan_degrees: negative exponent scale");
    if (!(eps_uniform > 0.0) || !(eps_uniform < 1.0)) throw std::invalid_argument("plan_degrees: eps");
    const double e = std::exp(1.0);
    DegreePlan plan;
    plan.eps_budget = eps_uniform;
    if (M1 > 0.0) plan.R1 = long(std::floor(solve_r(e * M1 / 4.0, 5.0 * eps_uniform / 12.0)));
    if (M2 > 0.0) plan.R2 = long(std::floor(0.5 * solve_r(e * M2 / 2.0, 5.0 * eps_uniform / 8.0)));
    plan.total_degree = 2 * (plan.R1 + plan.R2);
    return plan;
}

TargetPair build_targets(double M1, double M2, double eps_uniform) {
    const DegreePlan plan = plan_degrees(M1, M2, eps_uniform);
    const ChebPoly e_part = gauss_trunc(M1, int(plan.R1));
    const ChebPoly c_part = cos_trunc(M2, int(plan.R2));

    TargetPair t;
    t.safety_scale = 1.0 / (1.0 + eps_uniform);
    t.q_even = cheb_mul(e_part, c_part);
    t.q_even.scale(t.safety_scale);
    if (M2 > 0.0) {
        t.q_odd = cheb_mul(e_part, sin_trunc(M2, int(plan.R2)));
        t.q_odd.scale(t.safety_scale);
    } else {
        t.q_odd.parity = Parity::Odd;
        t.q_odd.coeffs.assign(t.q_even.coeffs.size() + 1, 0.0);
    }
    return t;
}

}  // namespace qadv
