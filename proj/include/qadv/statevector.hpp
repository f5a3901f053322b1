#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qadv/circuit.hpp"

namespace qadv {

// Dense amplitude vector of length 2^num_qubits, least-significant-bit-first
// index convention (qubit s has significance 2^s).
struct Statevector {
    int num_qubits = 0;
    std::vector<cd> amp;

    static Statevector zero_state(int n);
    static Statevector basis(int n, std::uint64_t index);

    std::uint64_t size() const { return amp.size(); }
    double norm() const;
};

// Apply the circuit in place using the runtime-selected kernels.
void apply_in_place(Statevector& state, const Circuit& c);

// Pure wrapper; checks the dimension precondition.
Statevector apply_circuit(Statevector state, const Circuit& c);

// Amplitudes with every listed ancilla qubit equal to |0>, unnormalized, in
// increasing order of the remaining bits, plus the squared norm (the
// post-selection success probability).
std::pair<std::vector<cd>, double> project_ancilla_zero(const Statevector& state,
                                                        std::span<const int> ancillas);

// Dense unitary of a circuit, column by column (test oracle; <= 12 qubits).
// Row-major: U[r * dim + c].
std::vector<cd> dense_unitary(const Circuit& c);

}  // namespace qadv
