#pragma once

#include <vector>

#include "qadv/circuit.hpp"
#include "qadv/stateprep.hpp"
#include "qadv/stencil.hpp"

namespace qadv {

// Unitary whose ancilla-zero block realizes a target matrix: the circuit
// acts on system qubits [0, system_qubits) plus the listed ancillas, and
// <0,x| U |0,y> = block[x][y] with operator norm <= 1.  `scale` records the
// factor between the block and the unnormalized target operator.
struct BlockEncoding {
    Circuit circuit;
    std::vector<int> ancillas;
    int system_qubits = 0;
    double scale = 1.0;
};

// Linear-combination-of-unitaries assembly: prepare, select, unprepare.
// `select` must be block-diagonal over the control register (the upper m
// qubits).
BlockEncoding lcu_encode(const PreparationPair& pair, const Circuit& select);

// Block encodings of the order-2p first-derivative stencil, scaled by
// c_p * dx.  The modular-adder form acts in the grid frame; the phase-adder
// form acts in the Fourier frame where the block is diagonal with entries
// -c_p * dx * lambda_k.  The two are QFT conjugates.
BlockEncoding encode_d2p_modular(int p, const GridSpec& grid);
BlockEncoding encode_d2p_fourier(int p, const GridSpec& grid);

// Product of two encodings that share the ancilla register and projector;
// adds one flag ancilla (top-left block becomes the composition of blocks).
BlockEncoding compose_encodings(const BlockEncoding& u, const BlockEncoding& v);

// Dense ancilla-zero block, row-major over system indices (test oracle,
// total qubits <= 14).
std::vector<cd> extract_block(const BlockEncoding& enc);

}  // namespace qadv
