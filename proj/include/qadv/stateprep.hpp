#pragma once

#include <span>

#include "qadv/circuit.hpp"

namespace qadv {

// Left/right preparation circuits for the coefficient vector of the
// derivative-stencil unitary sum; their |0>-columns' componentwise product
// recovers the signed coefficients.
struct PreparationPair {
    Circuit s_l;
    Circuit s_r;
    int m = 0;  // qubits, ceil(log2(2p+1))
};

// Amplitude encoder: circuit C with C|0...0> = v for a unit vector v of
// length 2^m.  Multiplexed-rotation ladder, O(2^m) gates.
Circuit prepare_amplitudes(std::span<const cd> v);

// The (S_L, S_R) pair for half-order p.  p = 1 and p = 3 use the compact
// hand-built circuits; other orders fall back to prepare_amplitudes.
PreparationPair sp_pair(int p);

// The target columns S_L|0> and S_R|0> (also the LCU coefficient data).
std::vector<cd> sp_left_column(int p);
std::vector<cd> sp_right_column(int p);

}  // namespace qadv
