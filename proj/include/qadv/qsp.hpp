#pragma once

#include <string>
#include <vector>

#include "qadv/chebapprox.hpp"

namespace qadv {

// Phase sequence phi_1..phi_d driving the projector-controlled rotation
// circuit; realizes a real polynomial of the same degree and parity.
// Degree 0 is the one-phase special case realizing the constant cos(phi_1).
struct AngleSequence {
    std::vector<double> phases;
    int degree = 0;
    Parity parity = Parity::Even;
};

// Value realized by the circuit for phases `phi` at signal value x in
// [-1, 1]: the direct 2x2 reduction of the alternating encoding /
// encoding-adjoint product with the phase blocks in between.  This is the
// convention the assembled circuits reproduce, bit for bit.
double qsp_eval(const AngleSequence& phi, double x);

// Find phases whose realized polynomial matches `target` (definite parity,
// sup norm strictly below 1) to `tol` at degree+1 Chebyshev nodes.
// Deterministic symmetric-phase Newton iteration; throws on |target| >= 1
// or non-convergence.
AngleSequence solve_angles(const ChebPoly& target, double tol);

// Optional on-disk cache of solved sequences, keyed by a hash of the
// coefficient bit patterns and the tolerance.  An empty path disables it;
// solve_angles reads and writes the directory when set.
void set_angle_cache_dir(std::string dir);
std::string angle_cache_dir();

}  // namespace qadv
