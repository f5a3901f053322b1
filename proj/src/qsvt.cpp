#include "qadv/qsvt.hpp"

#include <stdexcept>

namespace qadv {

namespace {
constexpr double kPi = 3.14159265358979323846;

Gate cpi_not(const std::vector<int>& enc_ancillas, int signal) {
    Gate g{GateKind::X, 0.0, signal, {}};
    for (int a : enc_ancillas) g.controls.emplace_back(a, 0);
    return g;
}
}  // namespace

std::vector<int> QsvtCircuit::all_ancillas() const {
    std::vector<int> all = encoding_ancillas;
    all.insert(all.end(), signal_ancillas.begin(), signal_ancillas.end());
    return all;
}

BlockEncoding QsvtCircuit::as_encoding() const {
    BlockEncoding e;
    e.circuit = circuit;
    e.ancillas = all_ancillas();
    e.system_qubits = system_qubits;
    e.scale = realized_scale;
    return e;
}

QsvtCircuit qsvt_single(const BlockEncoding& enc, const AngleSequence& phi) {
    const int d = phi.degree;
    const int signal = enc.circuit.num_qubits;

    QsvtCircuit q;
    q.system_qubits = enc.system_qubits;
    q.encoding_ancillas = enc.ancillas;
    q.signal_ancillas = {signal};
    q.realized_scale = 1.0;
    q.circuit = Circuit(signal + 1);

    q.circuit.h(signal);
    if (d == 0) {
        // one-phase constant: block value cos(phi_1)
        if (!phi.phases.empty()) q.circuit.rot_z_exp(signal, phi.phases[0]);
        q.circuit.h(signal);
        return q;
    }
    const Circuit enc_adj = enc.circuit.adjoint();
    for (int t = 1; t <= d; ++t) {
        q.circuit.append(t % 2 ? enc.circuit : enc_adj);
        q.circuit.add(cpi_not(enc.ancillas, signal));
        q.circuit.rot_z_exp(signal, phi.phases[std::size_t(d - t)]);
        q.circuit.add(cpi_not(enc.ancillas, signal));
    }
    q.circuit.h(signal);
    return q;
}

QsvtCircuit qsvt_parallel(const BlockEncoding& enc, const AngleSequence& phi_even,
                          const AngleSequence& phi_odd, bool imaginary_combination) {
    if (phi_odd.degree != phi_even.degree + 1)
        throw std::invalid_argument("qsvt_parallel: odd degree must exceed even degree by one");
    const int d = phi_even.degree;
    const int signal = enc.circuit.num_qubits;
    const int selector = signal + 1;

    QsvtCircuit q;
    q.system_qubits = enc.system_qubits;
    q.encoding_ancillas = enc.ancillas;
    q.signal_ancillas = {signal, selector};
    q.realized_scale = 0.5;
    q.circuit = Circuit(selector + 1);

    q.circuit.h(signal);
    q.circuit.h(selector);
    if (imaginary_combination) q.circuit.s(selector);

    // extra leading query of the odd branch
    q.circuit.append(controlled(enc.circuit.adjoint(), selector, 1));
    q.circuit.add(cpi_not(enc.ancillas, signal));
    q.circuit.add({GateKind::RotZExp, phi_odd.phases[std::size_t(d)], signal, {{selector, 1}}});
    q.circuit.add(cpi_not(enc.ancillas, signal));
    // degenerate even branch: degree 0 realizes the constant cos(phase)
    if (d == 0 && !phi_even.phases.empty())
        q.circuit.add({GateKind::RotZExp, phi_even.phases[0], signal, {{selector, 0}}});

    const Circuit enc_adj = enc.circuit.adjoint();
    for (int t = 1; t <= d; ++t) {
        q.circuit.append(t % 2 ? enc.circuit : enc_adj);
        q.circuit.add(cpi_not(enc.ancillas, signal));
        q.circuit.add({GateKind::RotZExp, phi_even.phases[std::size_t(d - t)], signal, {{selector, 0}}});
        q.circuit.add({GateKind::RotZExp, phi_odd.phases[std::size_t(d - t)], signal, {{selector, 1}}});
        q.circuit.add(cpi_not(enc.ancillas, signal));
    }
    q.circuit.h(signal);
    q.circuit.h(selector);
    return q;
}

QsvtCircuit conjugation_hoist(const QsvtCircuit& q, const Circuit& f_system) {
    if (f_system.num_qubits > q.system_qubits)
        throw std::invalid_argument("conjugation_hoist: frame must act on system qubits only");
    std::vector<int> id(f_system.num_qubits);
    for (int i = 0; i < f_system.num_qubits; ++i) id[i] = i;
    const int width = q.circuit.num_qubits;

    QsvtCircuit out = q;
    out.circuit = Circuit(width);
    out.circuit.append(remap_qubits(f_system.adjoint(), id, width));
    out.circuit.append(q.circuit);
    out.circuit.append(remap_qubits(f_system, id, width));
    return out;
}

}  // namespace qadv
