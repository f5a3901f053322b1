#pragma once

#include "qadv/circuit.hpp"

namespace qadv {

// Controlled translation-power circuits.  The target register occupies the
// low n qubits, the control register the m qubits above it; basis index
// j * 2^n + k corresponds to |j>|k> (control, target).
struct AdderSpec {
    int m = 1;  // control-register qubits
    int n = 1;  // target-register qubits
    long l = 0; // integer shift, reduced mod 2^n at synthesis

    void validate() const;
};

// Quantum Fourier transform on n qubits whose dense matrix equals
// F[j][k] = 2^{-n/2} exp(+2 pi i j k / 2^n), terminal swap layer included.
Circuit qft_circuit(int n);

// Diagonal R^l with R^l|k> = exp(2 pi i k l / 2^n)|k>; exactly n Phase gates.
Circuit r_power_circuit(int n, long l);

// Phase adder: sum_j |j><j| (x) R^{j+l}, realized as a controlled-phase
// ladder plus an R^l layer.  All gates are diagonal.
Circuit phase_adder_circuit(const AdderSpec& spec);

// Modular adder |j>|k> -> |j>|k + j + l mod 2^n>, Fourier conjugate of the
// phase adder.
Circuit modular_adder_circuit(const AdderSpec& spec);

}  // namespace qadv
