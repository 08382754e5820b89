#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "vantage/kernels/kernels.hpp"

namespace vantage::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* pick(const std::string& name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") {
    if (!cpu_has_avx2()) throw std::runtime_error("kernels: avx2 requested but not supported");
    return &avx2_kernels();
  }
  if (name == "auto") return cpu_has_avx2() ? &avx2_kernels() : &scalar_kernels();
  throw std::runtime_error("kernels: unknown variant '" + name + "' (scalar|avx2|auto)");
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("VANTAGE_KERNELS")) return pick(env);
  return pick("auto");
}

}  // namespace

const KernelTable& active_kernels() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = initial_table();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void force_kernels(const std::string& name) {
  g_active.store(pick(name), std::memory_order_release);
}

}  // namespace vantage::kernels
