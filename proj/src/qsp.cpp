#include "qadv/qsp.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <string>

namespace qadv {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mutex g_cache_mutex;
std::string g_cache_dir;

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string cache_key(const ChebPoly& target, double tol) {
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a(target.coeffs.data(), target.coeffs.size() * sizeof(double), h);
    int par = int(target.parity);
    h = fnv1a(&par, sizeof par, h);
    h = fnv1a(&tol, sizeof tol, h);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

bool cache_load(const ChebPoly& target, double tol, AngleSequence& out) {
    std::lock_guard lock(g_cache_mutex);
    if (g_cache_dir.empty()) return false;
    std::string path = g_cache_dir + "/qsp_" + cache_key(target, tol) + ".angles";
    std::FILE* f = std::fopen(path.c_str(), "r");
    if (!f) return false;
    char header[32] = {};
    int version = 0, degree = 0, parity = 0;
    long count = 0;
    bool ok = std::fscanf(f, "%15s %d", header, &version) == 2 &&
              std::string(header) == "qadv-angles" && version == 1 &&
              std::fscanf(f, "%d %d %ld", &degree, &parity, &count) == 3;
    AngleSequence seq;
    if (ok) {
        seq.degree = degree;
        seq.parity = Parity(parity);
        seq.phases.resize(std::size_t(count));
        for (long i = 0; ok && i < count; ++i) ok = std::fscanf(f, "%lf", &seq.phases[std::size_t(i)]) == 1;
    }
    std::fclose(f);
    if (ok) out = std::move(seq);
    return ok;
}

void cache_store(const ChebPoly& target, double tol, const AngleSequence& seq) {
    std::lock_guard lock(g_cache_mutex);
    if (g_cache_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(g_cache_dir, ec);
    std::string path = g_cache_dir + "/qsp_" + cache_key(target, tol) + ".angles";
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) return;
    std::fprintf(f, "qadv-angles 1\n%d %d %zu\n", seq.degree, int(seq.parity), seq.phases.size());
    for (double v : seq.phases) std::fprintf(f, "%.17g\n", v);
    std::fclose(f);
}

using cd = std::complex<double>;

struct M2 {
    cd a, b, c, d;  // [[a, b], [c, d]]
};

inline M2 mul(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline M2 phase_z(double t) { return {std::polar(1.0, t), 0.0, 0.0, std::polar(1.0, -t)}; }

// reflection-free rotation W(x) = [[x, -s], [s, x]] and its transpose
inline M2 rot_w(double x, double s) { return {x, -s, s, x}; }
inline M2 rot_wt(double x, double s) { return {x, s, -s, x}; }

// W-convention factor used by the symmetric-phase solver
inline M2 wx(double x, double s) { return {cd(x, 0), cd(0, s), cd(0, s), cd(x, 0)}; }

double wrap_angle(double t) {
    double r = std::remainder(t, 2.0 * kPi);
    return r;
}

}  // namespace

double qsp_eval(const AngleSequence& phi, double x) {
    if (x < -1.0 - 1e-12 || x > 1.0 + 1e-12) throw std::invalid_argument("qsp_eval: x outside [-1,1]");
    x = std::min(1.0, std::max(-1.0, x));
    const int d = phi.degree;
    if (d == 0) return phi.phases.empty() ? 1.0 : std::cos(phi.phases[0]);
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    M2 acc{1.0, 0.0, 0.0, 1.0};
    for (int t = 1; t <= d; ++t) {
        acc = mul(t % 2 ? rot_w(x, s) : rot_wt(x, s), acc);
        acc = mul(phase_z(phi.phases[std::size_t(d - t)]), acc);
    }
    return acc.a.real();
}

namespace {

// forward evaluation of the symmetric-phase product
// P(x) = <0| e^{i psi_0 Z} prod_j (W(x) e^{i psi_j Z}) |0>, plus the partial
// derivatives of Re P with respect to each psi_j (prefix/suffix sweep).
struct NodeEval {
    double g;
    std::vector<double> dg;  // d+1 entries
};

NodeEval eval_node(const std::vector<double>& psi, double x) {
    const int d = int(psi.size()) - 1;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    std::vector<M2> factor(d + 1);
    factor[0] = phase_z(psi[0]);
    for (int j = 1; j <= d; ++j) factor[j] = mul(wx(x, s), phase_z(psi[j]));

    std::vector<M2> prefix(d + 2), suffix(d + 2);
    prefix[0] = {1.0, 0.0, 0.0, 1.0};
    for (int j = 0; j <= d; ++j) prefix[j + 1] = mul(prefix[j], factor[j]);
    suffix[d + 1] = {1.0, 0.0, 0.0, 1.0};
    for (int j = d; j >= 0; --j) suffix[j] = mul(factor[j], suffix[j + 1]);

    NodeEval out;
    out.g = prefix[d + 1].a.real();
    out.dg.resize(d + 1);
    const cd iz(0.0, 1.0);
    for (int j = 0; j <= d; ++j) {
        // derivative inserts iZ after factor j
        const M2& L = prefix[j + 1];
        const M2& R = suffix[j + 1];
        cd val = iz * (L.a * R.a) - iz * (L.b * R.c);
        out.dg[j] = val.real();
    }
    return out;
}

}  // namespace

void set_angle_cache_dir(std::string dir) {
    std::lock_guard lock(g_cache_mutex);
    g_cache_dir = std::move(dir);
}

std::string angle_cache_dir() {
    std::lock_guard lock(g_cache_mutex);
    return g_cache_dir;
}

AngleSequence solve_angles(const ChebPoly& target, double tol) {
    if (target.parity == Parity::None) throw std::invalid_argument("solve_angles: parity must be definite");
    const int d = target.degree();
    if (d > 4000) throw std::invalid_argument("solve_angles: degree cap exceeded");
    if ((target.parity == Parity::Even && d % 2 != 0) || (target.parity == Parity::Odd && d % 2 != 1))
        throw std::invalid_argument("solve_angles: degree/parity mismatch");
    for (std::size_t i = 0; i < target.coeffs.size(); ++i) {
        bool should_be_zero = (target.parity == Parity::Even) ? (i % 2 == 1) : (i % 2 == 0);
        if (should_be_zero && target.coeffs[i] != 0.0)
            throw std::invalid_argument("solve_angles: coefficients violate the parity tag");
    }

    // magnitude precheck on a dense grid
    {
        const int samples = std::max(512, 8 * (d + 1));
        for (int i = 0; i <= samples; ++i) {
            double x = std::cos(kPi * double(i) / double(samples));
            if (std::fabs(target.eval(x)) > 1.0 - 1e-14)
                throw std::invalid_argument("solve_angles: |target| must stay below 1");
        }
    }

    AngleSequence seq;
    seq.degree = d;
    seq.parity = target.parity;

    if (d == 0) {
        seq.phases = {std::acos(target.coeffs.empty() ? 0.0 : target.coeffs[0])};
        return seq;
    }

    if (AngleSequence cached; cache_load(target, tol, cached) && cached.degree == d) return cached;

    // symmetric-phase Newton iteration on K positive Chebyshev nodes
    const int K = d / 2 + 1;
    std::vector<double> node(K), fval(K);
    for (int i = 0; i < K; ++i) {
        node[i] = std::cos(kPi * (2.0 * i + 1.0) / (4.0 * K));
        fval[i] = target.eval(node[i]);
    }

    const int nfree = (d + 2) / 2;  // reduced phases z_0..z_{nfree-1}
    std::vector<double> z(nfree, 0.0);
    z[0] = kPi / 4.0;

    auto expand = [&](const std::vector<double>& zz) {
        std::vector<double> psi(d + 1);
        for (int j = 0; j <= d; ++j) psi[j] = zz[std::min(j, d - j)];
        return psi;
    };

    auto residual = [&](const std::vector<double>& zz, std::vector<double>* res,
                        std::vector<double>* jac) {
        std::vector<double> psi = expand(zz);
        double rmax = 0.0;
        if (res) res->assign(K, 0.0);
        if (jac) jac->assign(std::size_t(K) * nfree, 0.0);
        for (int i = 0; i < K; ++i) {
            NodeEval ev = eval_node(psi, node[i]);
            double r = ev.g - fval[i];
            rmax = std::max(rmax, std::fabs(r));
            if (res) (*res)[i] = r;
            if (jac)
                for (int j = 0; j <= d; ++j) (*jac)[std::size_t(i) * nfree + std::min(j, d - j)] += ev.dg[j];
        }
        return rmax;
    };

    const double newton_tol = std::max(1e-14, std::min(tol * 1e-2, 1e-11));
    std::vector<double> res, jac;
    double rmax = residual(z, &res, &jac);
    bool converged = rmax <= newton_tol;
    for (int iter = 0; iter < 100 && !converged; ++iter) {
        // dense LU with partial pivoting on the K x nfree (= K) system
        const int nn = nfree;
        std::vector<double> a = jac;
        std::vector<double> rhs(res);
        std::vector<int> piv(nn);
        for (int i = 0; i < nn; ++i) piv[i] = i;
        bool singular = false;
        for (int col = 0; col < nn && !singular; ++col) {
            int best = col;
            for (int r = col + 1; r < nn; ++r)
                if (std::fabs(a[std::size_t(r) * nn + col]) > std::fabs(a[std::size_t(best) * nn + col]))
                    best = r;
            if (std::fabs(a[std::size_t(best) * nn + col]) < 1e-300) {
                singular = true;
                break;
            }
            if (best != col) {
                for (int c = 0; c < nn; ++c) std::swap(a[std::size_t(best) * nn + c], a[std::size_t(col) * nn + c]);
                std::swap(rhs[best], rhs[col]);
            }
            for (int r = col + 1; r < nn; ++r) {
                double f = a[std::size_t(r) * nn + col] / a[std::size_t(col) * nn + col];
                if (f == 0.0) continue;
                a[std::size_t(r) * nn + col] = 0.0;
                for (int c = col + 1; c < nn; ++c) a[std::size_t(r) * nn + c] -= f * a[std::size_t(col) * nn + c];
                rhs[r] -= f * rhs[col];
            }
        }
        if (singular) throw std::runtime_error("solve_angles: singular Jacobian");
        std::vector<double> step(nn, 0.0);
        for (int r = nn - 1; r >= 0; --r) {
            double acc = rhs[r];
            for (int c = r + 1; c < nn; ++c) acc -= a[std::size_t(r) * nn + c] * step[c];
            step[r] = acc / a[std::size_t(r) * nn + r];
        }

        // damped update
        double lambda = 1.0;
        std::vector<double> znew(nn);
        double rnew = rmax;
        for (int back = 0; back < 40; ++back) {
            for (int j = 0; j < nn; ++j) znew[j] = z[j] - lambda * step[j];
            rnew = residual(znew, nullptr, nullptr);
            if (rnew < rmax) break;
            lambda *= 0.5;
        }
        if (rnew >= rmax) throw std::runtime_error("solve_angles: no descent, conditioning problem");
        z = znew;
        rmax = residual(z, &res, &jac);
        converged = rmax <= newton_tol;
    }
    if (!converged) throw std::runtime_error("solve_angles: Newton iteration did not converge");

    // convert the symmetric phases to the circuit convention: gauge-shift so
    // the trailing phase is -pi/4, strip the leading offset (3pi/4 for even
    // degree, pi/4 for odd), shift interior phases by -pi/2, and flip by pi
    // when the alternating product carries a (-1)^{floor(d/2)} sign.
    std::vector<double> psi = expand(z);
    seq.phases.assign(d, 0.0);
    const double lead = (d % 2 == 0) ? 3.0 * kPi / 4.0 : kPi / 4.0;
    double phi1 = (psi[0] + psi[d] + kPi / 4.0) - lead;
    if ((d / 2) % 2 == 1) phi1 += kPi;
    seq.phases[0] = wrap_angle(phi1);
    for (int j = 1; j <= d - 1; ++j) seq.phases[j] = wrap_angle(psi[j] - kPi / 2.0);

    // verification pass at degree+1 Chebyshev nodes
    double worst = 0.0;
    for (int i = 0; i <= d; ++i) {
        double x = std::cos(kPi * (2.0 * i + 1.0) / (2.0 * (d + 1)));
        worst = std::max(worst, std::fabs(qsp_eval(seq, x) - target.eval(x)));
    }
    if (worst > tol) throw std::runtime_error("solve_angles: verification failed");
    cache_store(target, tol, seq);
    return seq;
}

}  // namespace qadv
