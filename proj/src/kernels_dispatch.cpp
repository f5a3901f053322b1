#include <atomic>

#include "qadv/kernels.hpp"

namespace qadv::kern {

const Ops* avx2_ops_impl();  // nullptr when not compiled in

namespace {
std::atomic<bool> g_force_scalar{false};

bool detect_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && avx2_ops_impl() != nullptr;
#else
    return false;
#endif
}
}  // namespace

bool avx2_available() {
    static const bool ok = detect_avx2();
    return ok;
}

void force_scalar(bool on) { g_force_scalar.store(on); }

const Ops& active_ops() {
    if (!g_force_scalar.load() && avx2_available()) return *avx2_ops_impl();
    return scalar_ops();
}

}  // namespace qadv::kern
