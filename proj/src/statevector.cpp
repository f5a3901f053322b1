#include "qadv/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "qadv/kernels.hpp"

namespace qadv {

Statevector Statevector::zero_state(int n) { return basis(n, 0); }

Statevector Statevector::basis(int n, std::uint64_t index) {
    if (n < 0 || n > 30) throw std::invalid_argument("statevector: bad qubit count");
    Statevector s;
    s.num_qubits = n;
    s.amp.assign(std::uint64_t(1) << n, cd(0.0, 0.0));
    s.amp[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    double t = 0.0;
    for (const auto& a : amp) t += std::norm(a);
    return std::sqrt(t);
}

void apply_in_place(Statevector& state, const Circuit& c) {
    if (state.amp.size() != (std::uint64_t(1) << c.num_qubits))
        throw std::invalid_argument("apply_circuit: dimension mismatch");
    const auto& ops = kern::active_ops();
    const std::uint64_t size = state.amp.size();
    cd* amp = state.amp.data();
    for (const auto& g : c.gates) {
        std::uint64_t cmask = 0, cval = 0;
        for (auto& [q, v] : g.controls) {
            cmask |= std::uint64_t(1) << q;
            if (v) cval |= std::uint64_t(1) << q;
        }
        switch (g.kind) {
            case GateKind::X: ops.flip(amp, size, g.target, cmask, cval); break;
            case GateKind::Z: ops.diag2(amp, size, g.target, cd(1, 0), cd(-1, 0), cmask, cval); break;
            case GateKind::S: ops.diag2(amp, size, g.target, cd(1, 0), cd(0, 1), cmask, cval); break;
            case GateKind::Phase:
                ops.diag2(amp, size, g.target, cd(1, 0), std::polar(1.0, g.param), cmask, cval);
                break;
            case GateKind::RotZExp:
                ops.diag2(amp, size, g.target, std::polar(1.0, -g.param), std::polar(1.0, g.param), cmask,
                          cval);
                break;
            case GateKind::GlobalPhase: ops.scale(amp, size, std::polar(1.0, g.param), cmask, cval); break;
            default: {
                cd m[4];
                gate_matrix(g.kind, g.param, m);
                ops.unitary2(amp, size, g.target, m, cmask, cval);
            }
        }
    }
}

Statevector apply_circuit(Statevector state, const Circuit& c) {
    apply_in_place(state, c);
    return state;
}

std::pair<std::vector<cd>, double> project_ancilla_zero(const Statevector& state,
                                                        std::span<const int> ancillas) {
    if (state.amp.empty()) throw std::invalid_argument("project: empty state");
    std::uint64_t anc_mask = 0;
    for (int q : ancillas) {
        if (q < 0 || q >= state.num_qubits) throw std::invalid_argument("project: ancilla out of range");
        anc_mask |= std::uint64_t(1) << q;
    }
    std::vector<int> free_bits;
    for (int q = 0; q < state.num_qubits; ++q)
        if (!(anc_mask >> q & 1)) free_bits.push_back(q);
    std::vector<cd> sub(std::uint64_t(1) << free_bits.size());
    double p = 0.0;
    for (std::uint64_t ci = 0; ci < sub.size(); ++ci) {
        std::uint64_t full = 0;
        for (std::size_t b = 0; b < free_bits.size(); ++b)
            if (ci >> b & 1) full |= std::uint64_t(1) << free_bits[b];
        sub[ci] = state.amp[full];
        p += std::norm(sub[ci]);
    }
    return {std::move(sub), p};
}

std::vector<cd> dense_unitary(const Circuit& c) {
    if (c.num_qubits > 12) throw std::invalid_argument("dense_unitary: too many qubits");
    const std::uint64_t dim = std::uint64_t(1) << c.num_qubits;
    std::vector<cd> u(dim * dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector s = Statevector::basis(c.num_qubits, col);
        apply_in_place(s, c);
        for (std::uint64_t row = 0; row < dim; ++row) u[row * dim + col] = s.amp[row];
    }
    return u;
}

}  // namespace qadv
