#include "qadv/stencil.hpp"

#include <cmath>
#include <stdexcept>

namespace qadv {

GridSpec GridSpec::make(double d, int n) {
    if (!(d > 0.0)) throw std::invalid_argument("grid: domain length must be positive");
    if (n < 1 || n > 30) throw std::invalid_argument("grid: bad qubit count");
    GridSpec g;
    g.d = d;
    g.n = n;
    g.N = 1L << n;
    g.dx = d / double(g.N);
    g.omega = 2.0 * 3.14159265358979323846 / d;
    return g;
}

std::vector<double> alpha_coefficients(int p) {
    if (p < 1) throw std::invalid_argument("alpha: p must be positive");
    std::vector<double> a(p);
    for (int j = 1; j <= p; ++j) {
        double mag = 2.0;
        for (int s = 1; s <= j; ++s) mag *= 1.0 - double(j) / double(p + s);
        a[j - 1] = (j % 2 == 1 ? mag : -mag);
    }
    return a;
}

double cp_constant(int p) {
    auto a = alpha_coefficients(p);
    double inv = 0.0;
    for (int j = 1; j <= p; ++j) inv += std::fabs(a[j - 1]) / double(j);
    return 1.0 / inv;
}

double lambda_k(int p, const GridSpec& grid, long k) {
    auto a = alpha_coefficients(p);
    const double h = grid.omega * double(k) * grid.dx;
    double v = 0.0;
    for (int j = 1; j <= p; ++j) v += a[j - 1] * std::sin(h * j) / (double(j) * grid.dx);
    return v;
}

double mu_k(int p, const GridSpec& grid, long k) {
    auto a = alpha_coefficients(p);
    const double h = grid.omega * double(k) * grid.dx;
    double v = 0.0;
    for (int j = 1; j <= p; ++j) {
        const double jdx = double(j) * grid.dx;
        v += a[j - 1] * (2.0 - 2.0 * std::cos(h * j)) / (jdx * jdx);
    }
    return v;
}

std::vector<double> stencil_column(int p, const GridSpec& grid, StencilOp which) {
    auto a = alpha_coefficients(p);
    const long N = grid.N;
    std::vector<double> col(N, 0.0);
    auto at = [&](long i) -> double& { return col[((i % N) + N) % N]; };
    switch (which) {
        case StencilOp::D2p:
            for (int j = 1; j <= p; ++j) {
                const double w = a[j - 1] / (2.0 * j * grid.dx);
                at(j) += w;
                at(-j) -= w;
            }
            break;
        case StencilOp::D2pSecond:
            for (int j = 1; j <= p; ++j) {
                const double w = a[j - 1] / (double(j) * grid.dx * double(j) * grid.dx);
                at(j) += w;
                at(-j) += w;
                at(0) -= 2.0 * w;
            }
            break;
        case StencilOp::D2pSquared: {
            // circular self-convolution of the sparse first-derivative column
            std::vector<std::pair<long, double>> nz;
            for (int j = 1; j <= p; ++j) {
                const double w = a[j - 1] / (2.0 * j * grid.dx);
                nz.emplace_back(j, w);
                nz.emplace_back(-j, -w);
            }
            for (auto& [o1, w1] : nz)
                for (auto& [o2, w2] : nz) at(o1 + o2) += w1 * w2;
            break;
        }
    }
    return col;
}

std::vector<double> dense_operator(int p, const GridSpec& grid, StencilOp which) {
    const long N = grid.N;
    if (N > (1L << 14)) throw std::invalid_argument("dense_operator: size guard exceeded");
    auto col = stencil_column(p, grid, which);
    std::vector<double> mat(std::size_t(N) * N, 0.0);
    // circulant: entry (r, c) = col[(r - c) mod N]; column c of T^j has its 1
    // in row c + j, matching samples of f(x + j dx) entering row i from
    // column i + j.
    for (long r = 0; r < N; ++r)
        for (long c = 0; c < N; ++c) mat[std::size_t(r) * N + c] = col[((c - r) % N + N) % N];
    return mat;
}

namespace {
double inv_central_binomial(int p) {
    // 1 / C(2p, p) via incremental products, stable for p <= 64
    double v = 1.0;
    for (int i = 1; i <= p; ++i) v *= double(i) / double(p + i);
    return v;
}
}  // namespace

double accuracy_const_first(int p) { return inv_central_binomial(p) / double(2 * p + 1); }
double accuracy_const_second(int p) {
    return 2.0 * inv_central_binomial(p) / (double(2 * p + 1) * double(2 * p + 2));
}
double accuracy_const_squared(int p) { return 2.0 * inv_central_binomial(p) / double(2 * p + 1); }

}  // namespace qadv
