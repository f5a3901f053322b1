#include "qadv/blockenc.hpp"

#include <cmath>
#include <stdexcept>

#include "qadv/arith.hpp"
#include "qadv/statevector.hpp"

namespace qadv {

BlockEncoding lcu_encode(const PreparationPair& pair, const Circuit& select) {
    const int m = pair.m;
    const int total = select.num_qubits;
    const int n = total - m;
    if (n < 0) throw std::invalid_argument("lcu: select narrower than the control register");
    if (pair.s_l.num_qubits != m || pair.s_r.num_qubits != m)
        throw std::invalid_argument("lcu: preparation register size mismatch");

    std::vector<int> up(m);
    for (int i = 0; i < m; ++i) up[i] = n + i;

    BlockEncoding enc;
    enc.system_qubits = n;
    enc.ancillas = up;
    enc.circuit = Circuit(total);
    enc.circuit.append(remap_qubits(pair.s_l, up, total));
    enc.circuit.append(select);
    enc.circuit.append(remap_qubits(pair.s_r.adjoint(), up, total));
    return enc;
}

namespace {
BlockEncoding encode_d2p(int p, const GridSpec& grid, bool fourier_frame) {
    const int m = int(std::ceil(std::log2(2.0 * p + 1.0)));
    if (m > grid.n) throw std::invalid_argument("encode_d2p: control register wider than system");
    auto pair = sp_pair(p);
    AdderSpec spec{m, grid.n, -long(p)};
    Circuit select = fourier_frame ? phase_adder_circuit(spec) : modular_adder_circuit(spec);
    BlockEncoding enc = lcu_encode(pair, select);
    enc.scale = cp_constant(p) * grid.dx;
    return enc;
}
}  // namespace

BlockEncoding encode_d2p_modular(int p, const GridSpec& grid) { return encode_d2p(p, grid, false); }
BlockEncoding encode_d2p_fourier(int p, const GridSpec& grid) { return encode_d2p(p, grid, true); }

BlockEncoding compose_encodings(const BlockEncoding& u, const BlockEncoding& v) {
    if (u.system_qubits != v.system_qubits) throw std::invalid_argument("compose: system size mismatch");
    if (u.ancillas != v.ancillas) throw std::invalid_argument("compose: encodings must share the ancilla register");

    int width = std::max(u.circuit.num_qubits, v.circuit.num_qubits);
    const int flag = width;  // one fresh ancilla

    BlockEncoding out;
    out.system_qubits = u.system_qubits;
    out.ancillas = u.ancillas;
    out.ancillas.push_back(flag);
    out.scale = u.scale * v.scale;
    out.circuit = Circuit(width + 1);
    out.circuit.append(v.circuit);
    Gate flip{GateKind::X, 0.0, flag, {}};
    for (int a : u.ancillas) flip.controls.emplace_back(a, 0);
    out.circuit.add(std::move(flip));
    out.circuit.x(flag);
    out.circuit.append(u.circuit);
    return out;
}

std::vector<cd> extract_block(const BlockEncoding& enc) {
    const int total = enc.circuit.num_qubits;
    if (total > 14) throw std::invalid_argument("extract_block: size guard exceeded");
    const std::uint64_t dim = std::uint64_t(1) << enc.system_qubits;
    std::vector<cd> block(dim * dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector s = Statevector::basis(total, col);  // system = low bits, ancillas |0>
        apply_in_place(s, enc.circuit);
        auto [sub, p] = project_ancilla_zero(s, enc.ancillas);
        for (std::uint64_t row = 0; row < dim; ++row) block[row * dim + col] = sub[row];
    }
    return block;
}

}  // namespace qadv
