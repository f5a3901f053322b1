#pragma once

#include <vector>

namespace qadv {

// Periodic uniform grid with N = 2^n points on [0, d).
struct GridSpec {
    double d = 1.0;   // domain length
    int n = 1;        // spatial qubits
    long N = 2;       // grid points
    double dx = 0.5;  // d / N
    double omega = 0; // 2 pi / d

    static GridSpec make(double d, int n);
};

// Central-difference weights alpha_1..alpha_p of the order-2p first-derivative
// stencil, computed by the telescoping product form (exact up to p = 64
// without overflow).
std::vector<double> alpha_coefficients(int p);

// Normalization c_p with c_p^{-1} = sum_j |alpha_j| / j.
double cp_constant(int p);

// Discrete symbols of the order-2p operators on Fourier mode k (periodic
// mod N): first derivative has eigenvalue i*lambda_k, the second-derivative
// stencil -mu_k.
double lambda_k(int p, const GridSpec& grid, long k);
double mu_k(int p, const GridSpec& grid, long k);

enum class StencilOp { D2p, D2pSquared, D2pSecond };

// First column of the circulant operator matrix.
std::vector<double> stencil_column(int p, const GridSpec& grid, StencilOp which);

// Dense N x N circulant matrix, row-major.  Test-scale guard N <= 2^14.
std::vector<double> dense_operator(int p, const GridSpec& grid, StencilOp which);

// Accuracy constants (p!)^2/(2p+1)!, 2(p!)^2/(2p+2)!, 2(p!)^2/(2p+1)!.
double accuracy_const_first(int p);
double accuracy_const_second(int p);
double accuracy_const_squared(int p);

}  // namespace qadv
