#pragma once

#include <vector>

namespace qadv {

enum class Parity { Even, Odd, None };

// Chebyshev-basis polynomial c_0 T_0 + c_1 T_1 + ... with a parity tag;
// for a definite parity the complementary coefficients are exactly zero.
struct ChebPoly {
    Parity parity = Parity::None;
    std::vector<double> coeffs;

    int degree() const { return coeffs.empty() ? 0 : int(coeffs.size()) - 1; }
    double eval(double x) const;  // Clenshaw
    bool is_zero(double tol = 0.0) const;
    void scale(double s);
};

// Exact product via T_m T_n = (T_{m+n} + T_{|m-n|}) / 2.
ChebPoly cheb_mul(const ChebPoly& a, const ChebPoly& b);

// Bessel functions of the first kind / modified, by downward (Miller)
// recurrence; bessel_i_scaled returns e^{-x} I_n(x) which stays finite for
// large arguments.
double bessel_j(int n, double x);
double bessel_i(int n, double x);
double bessel_i_scaled(int n, double x);

// Truncated Chebyshev expansions of cos(Mx), sin(Mx) and e^{-M x^2}:
//   C_R = J_0(M) + 2 sum_{k=1..R} (-1)^k J_2k(M) T_2k
//   S_R = 2 sum_{k=0..R} (-1)^k J_{2k+1}(M) T_{2k+1}
//   E_R = e^{-M/2} [ I_0(M/2) + 2 sum_{n=1..R} (-1)^n I_n(M/2) T_2n ]
ChebPoly cos_trunc(double M, int R);
ChebPoly sin_trunc(double M, int R);
ChebPoly gauss_trunc(double M, int R);

// The unique r > M with (M/r)^r = eps.
double solve_r(double M, double eps);

// Truncation orders for the product target e^{-M1 x^2} (cos + i sin)(M2 x)
// with uniform error <= eps_budget on [-1, 1].
struct DegreePlan {
    long R1 = 0;
    long R2 = 0;
    long total_degree = 0;  // 2 (R1 + R2); the odd factor has degree +1
    double eps_budget = 0.0;
};

DegreePlan plan_degrees(double M1, double M2, double eps_uniform);

// Safety-scaled even/odd target polynomials: q_even = s E C, q_odd = s E S
// with s = 1/(1 + eps) so the magnitude never exceeds 1.
struct TargetPair {
    ChebPoly q_even;
    ChebPoly q_odd;
    double safety_scale = 1.0;
};

TargetPair build_targets(double M1, double M2, double eps_uniform);

}  // namespace qadv
