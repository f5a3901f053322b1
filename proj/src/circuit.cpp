#include "qadv/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qadv {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Phase: return "Phase";
        case GateKind::RotY: return "RotY";
        case GateKind::RotZExp: return "RotZExp";
        case GateKind::GlobalPhase: return "GlobalPhase";
    }
    return "?";
}

void Circuit::add(Gate g) {
    if (g.kind == GateKind::GlobalPhase) {
        if (g.target != -1) throw std::invalid_argument("GlobalPhase takes no target");
    } else {
        if (g.target < 0 || g.target >= num_qubits) throw std::invalid_argument("gate target out of range");
    }
    if (g.has_param() && !std::isfinite(g.param)) throw std::invalid_argument("non-finite gate parameter");
    for (auto& [q, v] : g.controls) {
        if (q < 0 || q >= num_qubits) throw std::invalid_argument("control qubit out of range");
        if (q == g.target) throw std::invalid_argument("control collides with target");
        if (v != 0 && v != 1) throw std::invalid_argument("control value must be 0 or 1");
        for (auto& [q2, v2] : g.controls)
            if (&q2 != &q && q2 == q) throw std::invalid_argument("duplicate control qubit");
    }
    gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
    if (other.num_qubits > num_qubits) throw std::invalid_argument("append: circuit too wide");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::adjoint() const {
    Circuit r(num_qubits);
    r.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::H:
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z: break;
            case GateKind::S:
                g.kind = GateKind::Phase;
                g.param = -3.14159265358979323846 / 2.0;
                break;
            case GateKind::Phase:
            case GateKind::RotY:
            case GateKind::RotZExp:
            case GateKind::GlobalPhase: g.param = -g.param; break;
        }
        r.gates.push_back(std::move(g));
    }
    return r;
}

Circuit controlled(const Circuit& c, int control, int value) {
    for (const auto& g : c.gates) {
        if (g.target == control) throw std::invalid_argument("controlled: control collides with circuit");
        for (auto& [q, v] : g.controls)
            if (q == control) throw std::invalid_argument("controlled: control collides with circuit");
    }
    Circuit r(std::max(c.num_qubits, control + 1));
    r.gates.reserve(c.gates.size());
    for (const auto& g : c.gates) {
        Gate ng = g;
        if (ng.kind == GateKind::GlobalPhase) {
            // phase kickback: controlled global phase is a phase on the control
            ng.kind = GateKind::Phase;
            ng.target = control;
            if (value == 0) {
                r.x(control);
                r.gates.push_back(std::move(ng));
                r.x(control);
                continue;
            }
        } else {
            ng.controls.emplace_back(control, value);
        }
        r.gates.push_back(std::move(ng));
    }
    return r;
}

Circuit remap_qubits(const Circuit& c, const std::vector<int>& perm, int new_num_qubits) {
    if ((int)perm.size() != c.num_qubits) throw std::invalid_argument("remap: permutation size mismatch");
    Circuit r(new_num_qubits);
    for (const auto& g : c.gates) {
        Gate ng = g;
        if (ng.target >= 0) ng.target = perm[ng.target];
        for (auto& [q, v] : ng.controls) q = perm[q];
        r.add(std::move(ng));
    }
    return r;
}

namespace {

// Lowered counts of a gate with `nc` all-ones controls; x_like marks the
// CNOT family.  Two CNOT-class gates on nc-1 controls plus three controlled
// square roots (Barenco).
GateCounts lower_core(bool x_like, int nc) {
    GateCounts out;
    if (nc == 0) {
        out.one_qubit = 1;
        return out;
    }
    if (nc == 1) {
        if (x_like) {
            out.cnot = 1;
        } else {
            out.cnot = 2;
            out.one_qubit = 3;
        }
        return out;
    }
    GateCounts csqrt = lower_core(false, 1);      // C sqrt(V), C sqrt(V)^dag
    GateCounts cx_rec = lower_core(true, nc - 1); // C^{nc-1} X
    GateCounts tail = lower_core(false, nc - 1);  // C^{nc-1} sqrt(V)
    out += csqrt;
    out += cx_rec;
    out += csqrt;
    out += cx_rec;
    out += tail;
    return out;
}

}  // namespace

GateCounts count_gates(const Circuit& c) {
    GateCounts total;
    for (const auto& g : c.gates) {
        int nc = (int)g.controls.size();
        if (g.kind == GateKind::GlobalPhase) {
            if (nc == 0) continue;  // tracked exactly, costs nothing
            // becomes a Phase on one control, controlled on the others
            total += lower_core(false, nc - 1);
            continue;
        }
        // control polarity folds into neighboring 1Q layers and is not billed
        total += lower_core(g.kind == GateKind::X, nc);
    }
    return total;
}

RawCensus raw_census(const Circuit& c) {
    RawCensus r;
    for (const auto& g : c.gates) {
        int touched = (g.kind == GateKind::GlobalPhase ? 0 : 1) + (int)g.controls.size();
        if (touched == 1)
            r.one_qubit++;
        else if (touched == 2)
            r.two_qubit++;
        else if (touched > 2)
            r.multi++;
    }
    return r;
}

std::string dump(const Circuit& c) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& g : c.gates) {
        os << "GATE " << gate_kind_name(g.kind);
        if (g.has_param()) os << ' ' << g.param;
        if (g.target >= 0) os << " t" << g.target;
        for (auto& [q, v] : g.controls) os << " c" << q << '=' << v;
        os << '\n';
    }
    return os.str();
}

void gate_matrix(GateKind kind, double param, cd m[4]) {
    const double is2 = 0.70710678118654752440;
    switch (kind) {
        case GateKind::H: m[0] = is2, m[1] = is2, m[2] = is2, m[3] = -is2; break;
        case GateKind::X: m[0] = 0, m[1] = 1, m[2] = 1, m[3] = 0; break;
        case GateKind::Y: m[0] = 0, m[1] = cd(0, -1), m[2] = cd(0, 1), m[3] = 0; break;
        case GateKind::Z: m[0] = 1, m[1] = 0, m[2] = 0, m[3] = -1; break;
        case GateKind::S: m[0] = 1, m[1] = 0, m[2] = 0, m[3] = cd(0, 1); break;
        case GateKind::Phase: m[0] = 1, m[1] = 0, m[2] = 0, m[3] = std::polar(1.0, param); break;
        case GateKind::RotY: {
            double c = std::cos(param), s = std::sin(param);
            m[0] = c, m[1] = -s, m[2] = s, m[3] = c;
            break;
        }
        case GateKind::RotZExp:
            m[0] = std::polar(1.0, -param), m[1] = 0, m[2] = 0, m[3] = std::polar(1.0, param);
            break;
        case GateKind::GlobalPhase: {
            cd p = std::polar(1.0, param);
            m[0] = p, m[1] = 0, m[2] = 0, m[3] = p;
            break;
        }
    }
}

}  // namespace qadv
