#ifndef WV_PARALLEL_HPP
#define WV_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wv {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path; Parallel uses OpenMP when compiled in and must produce identical
/// results (trial streams are independent, reductions use a fixed block
/// decomposition, so output does not depend on the thread count).
enum class Exec { Serial, Parallel };

inline constexpr Exec kDefaultExec = Exec::Parallel;

namespace detail {
inline constexpr int kReduceBlocks = 256;
}

/// Sum of term(i) for i in [0, n) with a thread-count-independent result:
/// the range is cut into a fixed number of blocks, each block is summed
/// serially in index order, and the block sums are combined in order.
template <class Term>
double block_sum(int64_t n, Term term, Exec exec = kDefaultExec) {
    if (n <= 0) return 0.0;
    const int nblocks = static_cast<int>(n < detail::kReduceBlocks ? n : detail::kReduceBlocks);
    const int64_t chunk = (n + nblocks - 1) / nblocks;
    double partial[detail::kReduceBlocks];

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (int b = 0; b < nblocks; ++b) {
        const int64_t lo = static_cast<int64_t>(b) * chunk;
        const int64_t hi = lo + chunk < n ? lo + chunk : n;
        double s = 0.0;
        for (int64_t i = lo; i < hi; ++i) s += term(i);
        partial[b] = s;
    }
    (void)exec;

    double total = 0.0;
    for (int b = 0; b < nblocks; ++b) total += partial[b];
    return total;
}

/// Elementwise parallel loop; body(i) must only write to slot i.
template <class Body>
void parallel_for(int64_t n, Body body, Exec exec = kDefaultExec) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (int64_t i = 0; i < n; ++i) body(i);
    (void)exec;
}

}  // namespace wv

#endif  // WV_PARALLEL_HPP
