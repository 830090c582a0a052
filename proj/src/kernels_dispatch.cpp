#include <atomic>

#include "skinnyqr/kernels.hpp"

namespace skinnyqr::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable* avx2_table_compiled();
#endif
#if defined(__aarch64__)
const KernelTable* neon_table_compiled();
#endif

const KernelTable* avx2_table() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_table_compiled();
#endif
  return nullptr;
}

const KernelTable* neon_table() {
#if defined(__aarch64__)
  return neon_table_compiled();
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* pick_default() {
  if (const KernelTable* t = avx2_table()) return t;
  if (const KernelTable* t = neon_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = pick_default();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void set_active(const KernelTable& table) {
  g_active.store(&table, std::memory_order_release);
}

}  // namespace skinnyqr::kernels
