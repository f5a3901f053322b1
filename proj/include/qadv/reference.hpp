#pragma once

#include <vector>

#include "qadv/fft.hpp"
#include "qadv/stencil.hpp"

namespace qadv {

// 1D periodic profile on [0, d); the benchmark catalog plus literal data.
struct Profile {
    enum class Type { Zero, Gauss, GaussCos, SineSum, Rect, LiteralSamples, LiteralFourier };
    Type type = Type::Zero;
    double base = 0.0;  // additive constant
    // Gauss / GaussCos: amp * exp(-decay (x-x0)^2) [* cos(freq (x-x0))]
    double amp = 0.0, decay = 0.0, x0 = 0.0, freq = 0.0;
    // SineSum: sum of amp_i * sin(omega k_i x)
    std::vector<std::pair<double, long>> sines;
    // Rect: 1 on [lo, hi]
    double rect_lo = 0.0, rect_hi = 0.0;
    std::vector<double> literal_samples;
    std::vector<cd> literal_fourier;  // stored mod native_modes
    long native_modes = 32;           // N0: modes that resolve the profile

    double eval(double x, double domain) const;
};

enum class IcKind { Gaussian, SineSum, Wavepacket, Rectangle, Gaussian2D, MixedWave, LiteralSamples, LiteralFourier };

// Benchmark initial conditions; 2D entries are separable profile pairs.
struct InitialCondition {
    IcKind kind = IcKind::Gaussian;
    int dim = 1;
    Profile x;
    Profile y;  // dim == 2 only

    static InitialCondition gaussian();
    static InitialCondition sine_sum();
    static InitialCondition wavepacket();
    static InitialCondition rectangle();
    static InitialCondition gaussian2d();
    static InitialCondition mixed_wave();
    static InitialCondition literal_samples(std::vector<double> samples);
    static InitialCondition literal_fourier(std::vector<cd> modes_mod_n0);
};

// Grid samples of a profile (N points on [0, d)).
std::vector<double> profile_samples(const Profile& p, double domain, long N);

// Fourier coefficients of the profile folded to N modes (stored mod N).
// Analytic for Rect and LiteralFourier, FFT of a fine sampling otherwise.
std::vector<cd> profile_modes(const Profile& p, double domain, long N);

// Exact advection-diffusion evolution of a 1D profile, sampled on N points.
// Pure advection uses the translated closed form; otherwise a fine Fourier
// expansion (>= 4096 modes) is evolved.
std::vector<double> exact_solution(const Profile& p, double c, double nu, double domain, double t, long N);

enum class SemiVariant { Dsq, D2 };  // nu * D_{2p}^2 vs nu * D_{2p}^{(2)}

// Exact-in-time solution of the space-discretized system on the grid:
// mode k evolves by exp(-i c lambda_k t - nu m_k t) with m_k = lambda_k^2
// (Dsq) or mu_k (D2).
std::vector<cd> semidiscrete_solution(const Profile& p, double c, double nu, int order_half,
                                      const GridSpec& grid, double t, SemiVariant variant);

// Theory-side numbers for one problem instance.
struct TheoryReport {
    double B = 0.0;                   // accuracy constant of the error bound
    double tau = 0.0;                 // t * exp(-nu t mu')
    double mu1 = 0.0;
    double l2_bound = 0.0;            // normalized-L2 bound on |u_t - v_t|
    bool technical_ok_diffusion = true;
    bool technical_ok_advection = true;
    int planned_n = 0;
    double complexity_estimate = 0.0;
};

// Evaluate the semidiscrete error bound at the given grid.
TheoryReport l2_error_bound(const Profile& p, double c, double nu, int order_half, const GridSpec& grid,
                            double t, SemiVariant variant);

// Choose the qubit count for a target accuracy and check the technical
// assumptions of the complexity statement.
TheoryReport plan_grid_and_check(const Profile& p, double c, double nu, double domain, double T,
                                 int order_half, double eps);

// max_i |a_i - b_i|
double error_metric(std::span<const double> a, std::span<const double> b);
double error_metric(std::span<const cd> a, std::span<const cd> b);
double error_metric(std::span<const cd> a, std::span<const double> b);

// normalized L2 norm of grid samples (Parseval side of the norm bridge)
double normalized_l2(std::span<const cd> samples);

}  // namespace qadv
