#include "qadv/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace qadv {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr long kFineModes = 1L << 12;

long fold(long k, long N) { return ((k % N) + N) % N; }
}  // namespace

double Profile::eval(double x, double domain) const {
    // periodic wrap of the argument
    x -= domain * std::floor(x / domain);
    switch (type) {
        case Type::Zero: return base;
        case Type::Gauss:
        case Type::GaussCos: {
            // include neighboring images so translated evaluations stay periodic
            double v = base;
            for (int img = -1; img <= 1; ++img) {
                double s = x - x0 + img * domain;
                double g = amp * std::exp(-decay * s * s);
                v += (type == Type::GaussCos) ? g * std::cos(freq * s) : g;
            }
            return v;
        }
        case Type::SineSum: {
            double v = base;
            const double omega = 2.0 * kPi / domain;
            for (auto& [a, k] : sines) v += a * std::sin(omega * double(k) * x);
            return v;
        }
        case Type::Rect: return base + ((x >= rect_lo && x <= rect_hi) ? 1.0 : 0.0);
        case Type::LiteralSamples: {
            const long N = long(literal_samples.size());
            long j = std::lround(x / domain * double(N)) % N;
            return literal_samples[std::size_t(j)];
        }
        case Type::LiteralFourier: {
            const long N0 = long(literal_fourier.size());
            const double omega = 2.0 * kPi / domain;
            cd v = 0.0;
            for (long idx = 0; idx < N0; ++idx) {
                long k = idx <= N0 / 2 - 1 ? idx : idx - N0;
                v += literal_fourier[std::size_t(idx)] * std::polar(1.0, omega * double(k) * x);
            }
            return v.real();
        }
    }
    return 0.0;
}

InitialCondition InitialCondition::gaussian() {
    InitialCondition ic;
    ic.kind = IcKind::Gaussian;
    ic.x.type = Profile::Type::Gauss;
    ic.x.amp = 1.0;
    ic.x.decay = 10.0;
    ic.x.x0 = 5.0 / 3.0;
    ic.x.native_modes = 64;
    return ic;
}

InitialCondition InitialCondition::sine_sum() {
    InitialCondition ic;
    ic.kind = IcKind::SineSum;
    ic.x.type = Profile::Type::SineSum;
    ic.x.base = 1.0;
    ic.x.sines = {{0.5, 3}, {0.5, 11}};
    ic.x.native_modes = 32;
    return ic;
}

InitialCondition InitialCondition::wavepacket() {
    InitialCondition ic;
    ic.kind = IcKind::Wavepacket;
    ic.x.type = Profile::Type::GaussCos;
    ic.x.base = 0.6;
    ic.x.amp = 0.5;
    ic.x.decay = 5.0;
    ic.x.x0 = 2.0;
    ic.x.freq = 17.0 * kPi / 2.0;
    ic.x.native_modes = 64;
    return ic;
}

InitialCondition InitialCondition::rectangle() {
    InitialCondition ic;
    ic.kind = IcKind::Rectangle;
    ic.x.type = Profile::Type::Rect;
    ic.x.rect_lo = 0.0;
    ic.x.rect_hi = 2.0;
    ic.x.native_modes = 0;  // not band-limited
    return ic;
}

InitialCondition InitialCondition::gaussian2d() {
    InitialCondition ic;
    ic.kind = IcKind::Gaussian2D;
    ic.dim = 2;
    ic.x.type = Profile::Type::Gauss;
    ic.x.amp = 1.0;
    ic.x.decay = 7.0;
    ic.x.x0 = 5.0 / 3.0;
    ic.x.native_modes = 64;
    ic.y = ic.x;
    ic.y.x0 = 2.0;
    return ic;
}

InitialCondition InitialCondition::mixed_wave() {
    InitialCondition ic;
    ic.kind = IcKind::MixedWave;
    ic.dim = 2;
    ic.x.type = Profile::Type::Gauss;
    ic.x.amp = 1.0;
    ic.x.decay = 7.0;
    ic.x.x0 = 2.0;
    ic.x.native_modes = 64;
    ic.y.type = Profile::Type::SineSum;
    ic.y.base = 1.0;
    ic.y.sines = {{1.0, 5}};
    ic.y.native_modes = 16;
    return ic;
}

InitialCondition InitialCondition::literal_samples(std::vector<double> samples) {
    InitialCondition ic;
    ic.kind = IcKind::LiteralSamples;
    ic.x.type = Profile::Type::LiteralSamples;
    ic.x.native_modes = long(samples.size());
    ic.x.literal_samples = std::move(samples);
    return ic;
}

InitialCondition InitialCondition::literal_fourier(std::vector<cd> modes) {
    InitialCondition ic;
    ic.kind = IcKind::LiteralFourier;
    ic.x.type = Profile::Type::LiteralFourier;
    ic.x.native_modes = long(modes.size());
    ic.x.literal_fourier = std::move(modes);
    return ic;
}

std::vector<double> profile_samples(const Profile& p, double domain, long N) {
    std::vector<double> s(static_cast<std::size_t>(N));
    const double dx = domain / double(N);
    for (long j = 0; j < N; ++j) s[std::size_t(j)] = p.eval(double(j) * dx, domain);
    return s;
}

std::vector<cd> profile_modes(const Profile& p, double domain, long N) {
    if (p.type == Profile::Type::Rect) {
        std::vector<cd> a(std::size_t(N), 0.0);
        const double omega = 2.0 * kPi / domain;
        a[0] = p.base + (p.rect_hi - p.rect_lo) / domain;
        for (long k = 1; k < N; ++k) {
            long kk = k <= N / 2 - 1 ? k : k - N;
            const double w = omega * double(kk);
            a[std::size_t(k)] =
                (std::polar(1.0, -w * p.rect_lo) - std::polar(1.0, -w * p.rect_hi)) / (cd(0.0, w) * domain);
        }
        return a;
    }
    if (p.type == Profile::Type::LiteralFourier) {
        const long N0 = long(p.literal_fourier.size());
        std::vector<cd> a(std::size_t(N), 0.0);
        for (long idx = 0; idx < N0; ++idx) {
            long k = idx <= N0 / 2 - 1 ? idx : idx - N0;
            a[std::size_t(fold(k, N))] += p.literal_fourier[std::size_t(idx)];
        }
        return a;
    }
    if (p.type == Profile::Type::LiteralSamples) {
        // trigonometric interpolant of the sample array
        const long Ns = long(p.literal_samples.size());
        std::vector<cd> raw(p.literal_samples.begin(), p.literal_samples.end());
        auto coef = fourier_coefficients(raw);
        std::vector<cd> a(std::size_t(N), 0.0);
        for (long idx = 0; idx < Ns; ++idx) {
            long k = idx <= Ns / 2 - 1 ? idx : idx - Ns;
            a[std::size_t(fold(k, N))] += coef[std::size_t(idx)];
        }
        return a;
    }
    const long fine = std::max(N, kFineModes);
    std::vector<cd> samples(static_cast<std::size_t>(fine));
    const double dx = domain / double(fine);
    for (long j = 0; j < fine; ++j) samples[std::size_t(j)] = p.eval(double(j) * dx, domain);
    auto coef = fourier_coefficients(samples);
    if (fine == N) return coef;
    // fold fine modes onto the N-point grid (aliasing, matching grid sampling)
    std::vector<cd> a(std::size_t(N), 0.0);
    for (long idx = 0; idx < fine; ++idx) {
        long k = idx <= fine / 2 - 1 ? idx : idx - fine;
        a[std::size_t(fold(k, N))] += coef[std::size_t(idx)];
    }
    return a;
}

std::vector<double> exact_solution(const Profile& p, double c, double nu, double domain, double t, long N) {
    if (nu == 0.0 && p.type != Profile::Type::LiteralFourier && p.type != Profile::Type::LiteralSamples) {
        // translated closed form u0(x - c t)
        std::vector<double> s(static_cast<std::size_t>(N));
        const double dx = domain / double(N);
        for (long j = 0; j < N; ++j) s[std::size_t(j)] = p.eval(double(j) * dx - c * t, domain);
        return s;
    }
    const long fine = std::max(N, kFineModes);
    auto a = profile_modes(p, domain, fine);
    const double omega = 2.0 * kPi / domain;
    for (long idx = 0; idx < fine; ++idx) {
        long k = idx <= fine / 2 - 1 ? idx : idx - fine;
        const double wk = omega * double(k);
        a[std::size_t(idx)] *= std::polar(std::exp(-nu * wk * wk * t), -c * wk * t);
    }
    auto samples = fourier_synthesis(a);
    std::vector<double> out(static_cast<std::size_t>(N));
    const long stride = fine / N;
    for (long j = 0; j < N; ++j) out[std::size_t(j)] = samples[std::size_t(j * stride)].real();
    return out;
}

std::vector<cd> semidiscrete_solution(const Profile& p, double c, double nu, int order_half,
                                      const GridSpec& grid, double t, SemiVariant variant) {
    auto a = profile_modes(p, grid.d, grid.N);
    for (long idx = 0; idx < grid.N; ++idx) {
        long k = idx <= grid.N / 2 - 1 ? idx : idx - grid.N;
        const double l = lambda_k(order_half, grid, k);
        const double m = (variant == SemiVariant::Dsq) ? l * l : mu_k(order_half, grid, k);
        a[std::size_t(idx)] *= std::polar(std::exp(-nu * m * t), -c * l * t);
    }
    return fourier_synthesis(a);
}

namespace {

// normalized-L2 Sobolev seminorm sum_k |omega k|^{2m} |a_k|^2
double sobolev_sq(const std::vector<cd>& modes, double omega, long N, int m) {
    double acc = 0.0;
    for (long idx = 0; idx < N; ++idx) {
        long k = idx <= N / 2 - 1 ? idx : idx - N;
        acc += std::pow(std::fabs(omega * double(k)), 2.0 * m) * std::norm(modes[std::size_t(idx)]);
    }
    return acc;
}

double bound_B(const std::vector<cd>& modes, double omega, long N, double c, double nu, int p,
               SemiVariant variant) {
    const double cp1 = accuracy_const_first(p);
    const double cp2 = (variant == SemiVariant::Dsq) ? accuracy_const_squared(p) : accuracy_const_second(p);
    const double s1 = sobolev_sq(modes, omega, N, 2 * p + 1);
    const double s2 = sobolev_sq(modes, omega, N, 2 * p + 2);
    return std::sqrt(c * c * cp1 * cp1 * s1 + nu * nu * cp2 * cp2 * s2);
}

}  // namespace

TheoryReport l2_error_bound(const Profile& p, double c, double nu, int order_half, const GridSpec& grid,
                            double t, SemiVariant variant) {
    auto modes = profile_modes(p, grid.d, grid.N);
    TheoryReport r;
    const double l1 = lambda_k(order_half, grid, 1);
    r.mu1 = (variant == SemiVariant::Dsq) ? l1 * l1 : mu_k(order_half, grid, 1);
    r.B = bound_B(modes, grid.omega, grid.N, c, nu, order_half, variant);
    r.tau = t * std::exp(-nu * t * r.mu1);
    r.l2_bound = r.tau * std::pow(grid.dx, 2.0 * order_half) * r.B;
    return r;
}

TheoryReport plan_grid_and_check(const Profile& p, double c, double nu, double domain, double T,
                                 int order_half, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("plan: eps must lie in (0,1)");
    const long N0 = std::max<long>(2, p.native_modes > 0 ? p.native_modes : 4096);
    int n0 = 1;
    while ((1L << n0) < N0) ++n0;
    const GridSpec native = GridSpec::make(domain, n0);
    auto modes = profile_modes(p, domain, native.N);

    TheoryReport r;
    const double l1 = lambda_k(order_half, native, 1);
    r.mu1 = l1 * l1;  // production route evolves with the squared stencil
    r.B = bound_B(modes, native.omega, native.N, c, nu, order_half, SemiVariant::Dsq);
    r.tau = T * std::exp(-nu * T * r.mu1);

    const int p_ = order_half;
    const double inv2p = 1.0 / (2.0 * p_);
    double n_acc = std::log2(domain * std::pow(std::max(2.0 * r.tau * r.B / eps, 1e-300), inv2p));
    r.planned_n = std::max<int>(int(std::ceil(n_acc)), n0);
    r.l2_bound = r.tau * std::pow(domain / std::pow(2.0, r.planned_n), 2.0 * p_) * r.B;

    // technical assumptions of the complexity statement
    double u0_norm = std::sqrt(sobolev_sq(modes, native.omega, native.N, 0));
    const double e = std::exp(1.0);
    const double cp = cp_constant(p_);
    const double tb_eps_p = std::pow(std::max(r.tau * r.B / eps, 1e-300), 1.0 / p_);
    const double tb_eps_2p = std::pow(std::max(r.tau * r.B / eps, 1e-300), inv2p);
    r.technical_ok_diffusion =
        (e * e / 4.0) * nu * T * tb_eps_p / (cp * cp) >=
        std::log(48.0 * u0_norm / (5.0 * std::sqrt(2.0) * eps));
    r.technical_ok_advection =
        (e * e / 2.0) * c * T * tb_eps_2p / cp >= std::log(32.0 * u0_norm / (5.0 * std::sqrt(2.0) * eps));

    const double logn = std::log2(std::max(2.0, domain * tb_eps_2p));
    const double logp = std::max(1.0, std::log2(double(p_)));
    r.complexity_estimate =
        T * (nu * std::pow(tb_eps_p, 1.0) / (cp * cp) + c * tb_eps_2p / cp) * logn * logp;
    return r;
}

double error_metric(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("error_metric: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

double error_metric(std::span<const cd> a, std::span<const cd> b) {
    if (a.size() != b.size()) throw std::invalid_argument("error_metric: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double error_metric(std::span<const cd> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("error_metric: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - cd(b[i])));
    return m;
}

double normalized_l2(std::span<const cd> samples) {
    double acc = 0.0;
    for (auto& v : samples) acc += std::norm(v);
    return std::sqrt(acc / double(samples.size()));
}

}  // namespace qadv
