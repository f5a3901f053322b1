#pragma once

#include "qadv/blockenc.hpp"
#include "qadv/qsp.hpp"

namespace qadv {

// Assembled polynomial-transform circuit: the block over ALL ancillas
// (encoding + signal, plus the selector in the parallel form) equals
// realized_scale * q(A) for the encoded Hermitian A.
struct QsvtCircuit {
    Circuit circuit;
    std::vector<int> signal_ancillas;    // 1 (single) or 2 (parallel)
    std::vector<int> encoding_ancillas;
    int system_qubits = 0;
    double realized_scale = 1.0;

    std::vector<int> all_ancillas() const;
    BlockEncoding as_encoding() const;  // scale = realized_scale
};

// Single-sequence circuit: outer H on the signal ancilla, d alternating
// applications of the encoding and its adjoint, projector-controlled NOT
// pairs around each phase rotation.
QsvtCircuit qsvt_single(const BlockEncoding& enc, const AngleSequence& phi);

// Parallel even/odd circuit with a selector qubit; realizes
// (q_even + q_odd)(A) / 2, or (q_even + i q_odd)(A) / 2 when
// imaginary_combination is set (S gate on the selector).
// Requires deg(phi_odd) = deg(phi_even) + 1.
QsvtCircuit qsvt_parallel(const BlockEncoding& enc, const AngleSequence& phi_even,
                          const AngleSequence& phi_odd, bool imaginary_combination);

// Replace per-query frame conjugations by one initial f-adjoint and one
// terminal f on the system register: returns (I (x) f) . q . (I (x) f^dag).
QsvtCircuit conjugation_hoist(const QsvtCircuit& q, const Circuit& f_system);

}  // namespace qadv
