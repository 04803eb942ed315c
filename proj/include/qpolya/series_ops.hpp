#pragma once

#include <vector>

#include "qpolya/cyclotomic.hpp"
#include "qpolya/exec.hpp"

namespace qpolya {

using CycSeries = std::vector<Cyclotomic>;

namespace detail {

// Truncated Cauchy product; output slots are independent, so the parallel
// path splits on the output index.
inline CycSeries mul_trunc_impl(const CycSeries& a, const CycSeries& b, std::size_t n,
                                bool parallel) {
    CycSeries r(n, Cyclotomic());
    if (a.empty() || b.empty()) return r;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long t = 0; t < static_cast<long>(n); ++t) {
        auto ut = static_cast<std::size_t>(t);
        Cyclotomic acc;
        std::size_t lo = (ut >= b.size()) ? ut - b.size() + 1 : 0;
        std::size_t hi = std::min(ut, a.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[ut - i];
        r[ut] = acc;
    }
    return r;
}

} // namespace detail

inline CycSeries mul_trunc_serial(const CycSeries& a, const CycSeries& b, std::size_t n) {
    return detail::mul_trunc_impl(a, b, n, false);
}

inline CycSeries mul_trunc(const CycSeries& a, const CycSeries& b, std::size_t n,
                           Exec exec = Exec::Parallel) {
    return detail::mul_trunc_impl(a, b, n, exec == Exec::Parallel);
}

} // namespace qpolya
