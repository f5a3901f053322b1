#include "qadv/arith.hpp"

#include <stdexcept>

namespace qadv {

namespace {
constexpr double kPi = 3.14159265358979323846;

long reduce_mod(long l, int n) {
    const long N = 1L << n;
    long r = l % N;
    if (r < 0) r += N;
    return r;
}
}  // namespace

void AdderSpec::validate() const {
    if (m < 1 || n < m) throw std::invalid_argument("adder: requires n >= m >= 1");
    if (n > 30) throw std::invalid_argument("adder: register too wide");
}

Circuit qft_circuit(int n) {
    if (n < 1) throw std::invalid_argument("qft: n must be positive");
    Circuit c(n);
    for (int s = n - 1; s >= 0; --s) {
        c.h(s);
        for (int t = 0; t < s; ++t) c.cphase(t, s, 2.0 * kPi / double(1L << (s + 1 - t)));
    }
    for (int q = 0; q < n / 2; ++q) c.swap(q, n - 1 - q);
    return c;
}

Circuit r_power_circuit(int n, long l) {
    if (n < 1) throw std::invalid_argument("r_power: n must be positive");
    const long lr = reduce_mod(l, n);
    Circuit c(n);
    for (int s = 0; s < n; ++s) c.phase(s, 2.0 * kPi * double(lr) / double(1L << (n - s)));
    return c;
}

Circuit phase_adder_circuit(const AdderSpec& spec) {
    spec.validate();
    const int m = spec.m, n = spec.n;
    const long lr = reduce_mod(spec.l, n);
    Circuit c(m + n);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < n - s; ++t) c.cphase(n + s, t, 2.0 * kPi / double(1L << (n - s - t)));
    for (int s = 0; s < n; ++s) c.phase(s, 2.0 * kPi * double(lr) / double(1L << (n - s)));
    return c;
}

Circuit modular_adder_circuit(const AdderSpec& spec) {
    spec.validate();
    const int m = spec.m, n = spec.n;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    Circuit f = remap_qubits(qft_circuit(n), id, m + n);
    Circuit c(m + n);
    c.append(f);
    c.append(phase_adder_circuit(spec));
    c.append(f.adjoint());
    return c;
}

}  // namespace qadv
