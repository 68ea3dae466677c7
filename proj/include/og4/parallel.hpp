#ifndef OG4_PARALLEL_HPP
#define OG4_PARALLEL_HPP

namespace og4 {

/// Process-wide switch for the OpenMP kernels. The serial paths are the
/// reference implementation; tests compare both.
void set_parallel_kernels(bool enabled);
bool parallel_kernels();

}  // namespace og4

#endif
