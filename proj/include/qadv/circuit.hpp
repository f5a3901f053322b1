#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qadv {

using cd = std::complex<double>;

enum class GateKind : uint8_t { H, X, Y, Z, S, Phase, RotY, RotZExp, GlobalPhase };

// One gate of the circuit IR.  All primitive gates act on a single target
// qubit (GlobalPhase has none) plus an optional list of (qubit, value)
// controls with value in {0,1}.
//
// Parameter conventions:
//   Phase(t)    = diag(1, e^{i t})
//   RotY(t)     = [[cos t, -sin t], [sin t, cos t]]      (full angle)
//   RotZExp(t)  = e^{-i t sigma_z} = diag(e^{-i t}, e^{i t})
//   GlobalPhase(t) multiplies the state by e^{i t}
struct Gate {
    GateKind kind;
    double param = 0.0;
    int target = -1;  // -1 only for GlobalPhase
    std::vector<std::pair<int, int>> controls;

    bool has_param() const {
        return kind == GateKind::Phase || kind == GateKind::RotY || kind == GateKind::RotZExp ||
               kind == GateKind::GlobalPhase;
    }
};

const char* gate_kind_name(GateKind k);

// Ordered gate list over a fixed qubit count.
struct Circuit {
    int num_qubits = 0;

    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int nq) : num_qubits(nq) {}

    void add(Gate g);

    // Convenience emitters.
    void h(int q) { add({GateKind::H, 0.0, q, {}}); }
    void x(int q) { add({GateKind::X, 0.0, q, {}}); }
    void y(int q) { add({GateKind::Y, 0.0, q, {}}); }
    void z(int q) { add({GateKind::Z, 0.0, q, {}}); }
    void s(int q) { add({GateKind::S, 0.0, q, {}}); }
    void phase(int q, double t) { add({GateKind::Phase, t, q, {}}); }
    void rot_y(int q, double t) { add({GateKind::RotY, t, q, {}}); }
    void rot_z_exp(int q, double t) { add({GateKind::RotZExp, t, q, {}}); }
    void global_phase(double t) { add({GateKind::GlobalPhase, t, -1, {}}); }
    void cx(int c, int t) { add({GateKind::X, 0.0, t, {{c, 1}}}); }
    void cphase(int c, int t, double a) { add({GateKind::Phase, a, t, {{c, 1}}}); }
    // swap as its standard 3-CNOT lowering
    void swap(int a, int b) {
        cx(a, b);
        cx(b, a);
        cx(a, b);
    }

    void append(const Circuit& other);
    Circuit adjoint() const;
};

// Circuit acting as `c` when `control` is in |value>, identity otherwise.
// GlobalPhase gates become Phase gates on the control qubit.
Circuit controlled(const Circuit& c, int control, int value);

// Rebuild `c` with qubit i renamed to perm[i]; the result has new_num_qubits qubits.
Circuit remap_qubits(const Circuit& c, const std::vector<int>& perm, int new_num_qubits);

// Lowered gate totals.  The lowering is fixed so counts are reproducible:
// a bare 1Q gate counts 1, CNOT counts 1, any other singly-controlled 1Q gate
// becomes 2 CNOT + 3 1Q (ABC decomposition), and a gate with c >= 2 controls
// is expanded recursively into two CNOT-class gates on c-1 controls plus
// three controlled square roots.  Zero-valued controls add an X conjugation
// pair.  GlobalPhase contributes nothing (a controlled GlobalPhase is a Phase
// on the control).
struct GateCounts {
    std::int64_t one_qubit = 0;
    std::int64_t cnot = 0;

    GateCounts& operator+=(const GateCounts& o) {
        one_qubit += o.one_qubit;
        cnot += o.cnot;
        return *this;
    }
};

GateCounts count_gates(const Circuit& c);

// Raw census of the gate list before lowering: gates touching one qubit,
// two qubits (one control), or more.  GlobalPhase without controls is not
// counted.
struct RawCensus {
    std::int64_t one_qubit = 0;
    std::int64_t two_qubit = 0;
    std::int64_t multi = 0;
};

RawCensus raw_census(const Circuit& c);

// Text dump, one gate per line: "GATE <kind> [param] [t<target>] [c<q>=<v>...]".
std::string dump(const Circuit& c);

// 2x2 unitary of a primitive gate kind (GlobalPhase gives e^{it} I).
void gate_matrix(GateKind kind, double param, cd m[4]);

}  // namespace qadv
