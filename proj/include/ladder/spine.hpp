#pragma once

#include "ladder/connectivity.hpp"
#include "ladder/ladder.hpp"

namespace ladder {

namespace detail {

/// Inductive corner merge for the a_1 < c_1 orientation. At stage u the
/// lower corners up to c_u are collapsed into one, then the upper corners up
/// to the next lower row; the loop stops when the u-th corner is missing.
inline Ladder spine_forward(Ladder Y)
{
    std::vector<int> lo = Y.lo_bounds(), hi = Y.hi_bounds();
    const int m = Y.rows(), n = Y.cols();
    for (int u = 1;; ++u) {
        CornerData cd = corners(Ladder(m, n, lo, hi));
        if (u > cd.h()) break;
        require(cd.a(u) < cd.c(u), errc::internal, "spine stage lost its orientation");
        int v = u;
        while (v + 1 <= cd.h() && cd.a(v + 1) < cd.c(u)) ++v;
        // cells (e,f) with e < a_v and f < b_u leave the ladder
        for (int e = 1; e < cd.a(v); ++e) lo[static_cast<size_t>(e - 1)] = std::max(lo[static_cast<size_t>(e - 1)], cd.b(u));

        cd = corners(Ladder(m, n, lo, hi));
        if (u > cd.k()) break;
        int w = u;
        while (w + 1 <= cd.k() && cd.c(w + 1) < cd.a(u + 1)) ++w;
        for (int e = cd.c(u) + 1; e <= m; ++e) hi[static_cast<size_t>(e - 1)] = std::min(hi[static_cast<size_t>(e - 1)], cd.d(w));
    }
    return Ladder(m, n, std::move(lo), std::move(hi));
}

} // namespace detail

/// The spine of a thin two-sided 2-connected ladder: repeatedly delete the
/// cells that separate consecutive same-side corners until the corner rows
/// and columns strictly alternate.
inline Ladder spine(const Ladder& Y)
{
    ShapeReport sh = shape(Y);
    require(sh.two_sided, errc::not_two_sided, "spine needs a two-sided ladder");
    require(sh.thin, errc::not_thin, "spine needs a thin ladder");
    require(two_connected(Y), errc::not_2_connected, "spine needs a 2-connected ladder");

    CornerData cd = corners(Y);
    Ladder out = cd.a(1) < cd.c(1) ? detail::spine_forward(Y)
                                   : reflect(detail::spine_forward(reflect(Y)));
    require(shape(out).is_spine, errc::internal, "spine construction left a non-alternating ladder");
    return out;
}

} // namespace ladder
