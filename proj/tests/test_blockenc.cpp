#include <cmath>

#include "doctest.h"
#include "qadv/arith.hpp"
#include "qadv/blockenc.hpp"
#include "qadv/statevector.hpp"

using namespace qadv;

namespace {

std::vector<cd> matmul(const std::vector<cd>& a, const std::vector<cd>& b, std::size_t dim) {
    std::vector<cd> r(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            cd v = a[i * dim + k];
            if (v == cd(0.0)) continue;
            for (std::size_t j = 0; j < dim; ++j) r[i * dim + j] += v * b[k * dim + j];
        }
    return r;
}

double mat_dev(const std::vector<cd>& a, const std::vector<cd>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("lcu with trivial preparation encodes the unitary itself") {
    PreparationPair pair;
    pair.m = 1;
    pair.s_l = Circuit(1);
    pair.s_r = Circuit(1);
    Circuit select(3);  // controlled-nothing: identity select
    select.add({GateKind::X, 0.0, 0, {{2, 1}}});  // acts only on the j=1 branch
    BlockEncoding enc = lcu_encode(pair, select);
    auto blk = extract_block(enc);
    // ancilla stays |0>, so the block is the j=0 branch: identity
    std::vector<cd> eye(16, 0.0);
    for (int i = 0; i < 4; ++i) eye[i * 4 + i] = 1.0;
    CHECK(mat_dev(blk, eye) < 1e-13);
}

TEST_CASE("two-term lcu: (I + X)/2 via a Hadamard pair") {
    PreparationPair pair;
    pair.m = 1;
    pair.s_l = Circuit(1);
    pair.s_l.h(0);
    pair.s_r = pair.s_l;
    Circuit select(2);
    select.add({GateKind::X, 0.0, 0, {{1, 1}}});
    BlockEncoding enc = lcu_encode(pair, select);
    auto blk = extract_block(enc);
    CHECK(std::abs(blk[0] - 0.5) < 1e-13);
    CHECK(std::abs(blk[1] - 0.5) < 1e-13);
    CHECK(std::abs(blk[2] - 0.5) < 1e-13);
    CHECK(std::abs(blk[3] - 0.5) < 1e-13);
}

TEST_CASE("fourier-frame encoding is diagonal with entries -cp dx lambda_k") {
    for (int p : {1, 2, 3}) {
        for (int n : {3, 4, 5}) {
            auto grid = GridSpec::make(4.0, n);
            auto enc = encode_d2p_fourier(p, grid);
            auto blk = extract_block(enc);
            const long N = grid.N;
            const double cpdx = cp_constant(p) * grid.dx;
            for (long r = 0; r < N; ++r)
                for (long c = 0; c < N; ++c) {
                    cd want = (r == c) ? cd(-cpdx * lambda_k(p, grid, r), 0.0) : cd(0.0);
                    CHECK(std::abs(blk[std::size_t(r) * N + c] - want) < 1e-12);
                }
        }
    }
}

TEST_CASE("modular-frame encoding matches -i cp dx times the dense stencil") {
    for (int p : {1, 2}) {
        const int n = 3;
        auto grid = GridSpec::make(4.0, n);
        auto enc = encode_d2p_modular(p, grid);
        auto blk = extract_block(enc);
        auto dmat = dense_operator(p, grid, StencilOp::D2p);
        const long N = grid.N;
        const double cpdx = cp_constant(p) * grid.dx;
        double dev = 0.0, herm = 0.0;
        for (long r = 0; r < N; ++r)
            for (long c = 0; c < N; ++c) {
                cd want = cd(0.0, -cpdx) * dmat[std::size_t(r) * N + c];
                dev = std::max(dev, std::abs(blk[std::size_t(r) * N + c] - want));
                herm = std::max(herm,
                                std::abs(blk[std::size_t(r) * N + c] -
                                         std::conj(blk[std::size_t(c) * N + r])));
            }
        CHECK(dev < 1e-12);
        CHECK(herm < 1e-12);
    }
}

TEST_CASE("encoded block norm never exceeds one") {
    for (int p : {1, 2, 3}) {
        for (int n : {3, 4, 5}) {
            auto grid = GridSpec::make(4.0, n);
            auto blk = extract_block(encode_d2p_fourier(p, grid));
            for (long k = 0; k < grid.N; ++k)
                CHECK(std::abs(blk[std::size_t(k) * grid.N + k]) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("ancilla register width") {
    auto grid = GridSpec::make(4.0, 5);
    CHECK(encode_d2p_fourier(1, grid).ancillas.size() == 2);
    CHECK(encode_d2p_fourier(2, grid).ancillas.size() == 3);
    CHECK(encode_d2p_fourier(3, grid).ancillas.size() == 3);
    CHECK(encode_d2p_fourier(4, grid).ancillas.size() == 4);
    auto g3 = GridSpec::make(4.0, 4);
    CHECK(encode_d2p_fourier(7, g3).ancillas.size() == 4);
    CHECK_THROWS(encode_d2p_fourier(7, GridSpec::make(4.0, 3)));  // m > n
}

TEST_CASE("the two encodings are QFT conjugates") {
    for (int p : {1, 3}) {
        for (int n : {3, 4}) {
            auto grid = GridSpec::make(4.0, n);
            auto em = encode_d2p_modular(p, grid);
            auto ep = encode_d2p_fourier(p, grid);
            const int total = em.circuit.num_qubits;
            std::vector<int> id(n);
            for (int i = 0; i < n; ++i) id[i] = i;
            auto fmat = dense_unitary(remap_qubits(qft_circuit(n), id, total));
            auto fdag = dense_unitary(remap_qubits(qft_circuit(n).adjoint(), id, total));
            auto um = dense_unitary(em.circuit);
            auto up = dense_unitary(ep.circuit);
            const std::size_t dim = std::size_t(1) << total;
            auto conj = matmul(fdag, matmul(up, fmat, dim), dim);
            CHECK(mat_dev(um, conj) < 1e-11);
        }
    }
}

TEST_CASE("composition multiplies blocks") {
    // compose(encoding of A, trivial encoding of I) has block A
    auto grid = GridSpec::make(4.0, 3);
    auto ea = encode_d2p_fourier(1, grid);
    BlockEncoding ei;
    ei.circuit = Circuit(ea.circuit.num_qubits);
    ei.ancillas = ea.ancillas;
    ei.system_qubits = ea.system_qubits;
    auto comp = compose_encodings(ea, ei);
    CHECK(comp.ancillas.size() == ea.ancillas.size() + 1);
    auto blk = extract_block(comp);
    auto want = extract_block(ea);
    CHECK(mat_dev(blk, want) < 1e-12);

    // (I+X)/2 times (I+Z)/2
    PreparationPair pair;
    pair.m = 1;
    pair.s_l = Circuit(1);
    pair.s_l.h(0);
    pair.s_r = pair.s_l;
    Circuit selx(2), selz(2);
    selx.add({GateKind::X, 0.0, 0, {{1, 1}}});
    selz.add({GateKind::Z, 0.0, 0, {{1, 1}}});
    auto ex = lcu_encode(pair, selx);
    auto ez = lcu_encode(pair, selz);
    auto exz = compose_encodings(ex, ez);
    auto bx = extract_block(ex);
    auto bz = extract_block(ez);
    auto bxz = extract_block(exz);
    auto prod = matmul(bx, bz, 2);
    CHECK(mat_dev(bxz, prod) < 1e-13);
}

TEST_CASE("extract_block basics") {
    BlockEncoding eye;
    eye.circuit = Circuit(3);
    eye.ancillas = {2};
    eye.system_qubits = 2;
    auto b = extract_block(eye);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(b[r * 4 + c] - (r == c ? 1.0 : 0.0)) < 1e-15);

    BlockEncoding had;
    had.circuit = Circuit(2);
    had.circuit.h(1);
    had.ancillas = {1};
    had.system_qubits = 1;
    auto bh = extract_block(had);
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(bh[0] - is2) < 1e-15);
    CHECK(std::abs(bh[3] - is2) < 1e-15);
    CHECK(std::abs(bh[1]) < 1e-15);
    CHECK(std::abs(bh[2]) < 1e-15);
}

TEST_CASE("lcu block equals the explicit unitary sum") {
    // a(p) with the modular select reproduces sum_j a_j T^{j-p} densely
    const int p = 2, n = 3;
    auto grid = GridSpec::make(4.0, n);
    auto enc = encode_d2p_modular(p, grid);
    auto blk = extract_block(enc);
    auto alpha = alpha_coefficients(p);
    const double cp = cp_constant(p);
    const long N = grid.N;
    std::vector<cd> want(std::size_t(N) * N, 0.0);
    for (int j = 1; j <= p; ++j) {
        cd aj = cd(0.0, cp * alpha[j - 1] / (2.0 * j));
        for (long k = 0; k < N; ++k) {
            want[std::size_t((k + j) % N) * N + k] += aj;   // T^{+j}
            want[std::size_t((k - j + N) % N) * N + k] -= aj;  // T^{-j}
        }
    }
    CHECK(mat_dev(blk, want) < 1e-12);
}
