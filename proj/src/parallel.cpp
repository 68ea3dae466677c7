#include "og4/parallel.hpp"

#include <atomic>

namespace og4 {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel_kernels(bool enabled) { g_parallel.store(enabled); }
bool parallel_kernels() { return g_parallel.load(); }

}  // namespace og4
