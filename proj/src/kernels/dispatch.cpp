#include <atomic>
#include <cstdlib>

#include "relm/kernels.hpp"

namespace relm::kern {
namespace {

bool host_supports(const Backend* b) {
  if (b == nullptr) return false;
#if defined(__x86_64__) || defined(_M_X64)
  if (b == avx2_backend()) return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
  return true;  // scalar always; neon is baseline on aarch64
}

const Backend* lookup(std::string_view name) {
  if (name == "scalar") return &scalar_backend();
  if (name == "avx2") return avx2_backend();
  if (name == "neon") return neon_backend();
  return nullptr;
}

const Backend* resolve() {
  if (const char* env = std::getenv("RELM_KERNELS")) {
    const Backend* b = lookup(env);
    if (host_supports(b)) return b;
  }
  if (host_supports(avx2_backend())) return avx2_backend();
  if (host_supports(neon_backend())) return neon_backend();
  return &scalar_backend();
}

std::atomic<const Backend*>& active_slot() {
  static std::atomic<const Backend*> slot{resolve()};
  return slot;
}

}  // namespace

const Backend& active() { return *active_slot().load(std::memory_order_relaxed); }

std::string_view active_name() { return active().name; }

bool set_active(std::string_view name) {
  const Backend* b = lookup(name);
  if (!host_supports(b)) return false;
  active_slot().store(b, std::memory_order_relaxed);
  return true;
}

}  // namespace relm::kern
