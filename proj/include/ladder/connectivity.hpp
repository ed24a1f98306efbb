#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "ladder/ladder.hpp"

namespace ladder {

/// A t x t grid of positions lies fully in Y iff its top-left and
/// bottom-right cells do (the staircase bounds sandwich everything between).
inline bool box_in(const Ladder& Y, int r, int c, int t)
{
    return r + t - 1 <= Y.rows() && c + t - 1 <= Y.cols() && Y.contains(r, c) &&
           Y.contains(r + t - 1, c + t - 1);
}

/// Whether Y contains any t x t full submatrix. Every scattered choice of
/// rows/columns spans a full bounding box, so contiguous boxes suffice.
inline bool has_t_minor(const Ladder& Y, int t)
{
    require(t >= 1, errc::index_out_of_range, "t must be >= 1");
    for (int r = 1; r + t - 1 <= Y.rows(); ++r)
        for (int c = 1; c + t - 1 <= Y.cols(); ++c)
            if (box_in(Y, r, c, t)) return true;
    return false;
}

struct TConnectivity {
    bool connected = true;
    std::vector<Cell> z1; // witness partition when disconnected
    std::vector<Cell> z2;
};

namespace detail {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<size_t>(x)] = y;
    }
};

inline bool cells_satisfy_axiom(const std::vector<Cell>& cells, int m, int n)
{
    std::vector<std::vector<bool>> occ(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(n), false));
    for (const Cell& c : cells) occ[static_cast<size_t>(c.row - 1)][static_cast<size_t>(c.col - 1)] = true;
    return axiom_holds(occ);
}

} // namespace detail

/// Exact t-disconnection search. Cells sharing a t-minor are glued into
/// co-occurrence components (via contiguous t-boxes, whose closure equals the
/// common-minor closure); a disconnection is a bipartition of components into
/// two nonempty parts that both satisfy the ladder axiom.
inline TConnectivity t_connectivity(const Ladder& Y, int t, int component_cap = 20)
{
    require(t >= 1, errc::index_out_of_range, "t must be >= 1");
    std::vector<Cell> all = Y.cells();
    const int ncells = static_cast<int>(all.size());
    std::map<Cell, int> id;
    for (int i = 0; i < ncells; ++i) id[all[static_cast<size_t>(i)]] = i;

    detail::DisjointSet ds(ncells);
    for (int r = 1; r + t - 1 <= Y.rows(); ++r)
        for (int c = 1; c + t - 1 <= Y.cols(); ++c)
            if (box_in(Y, r, c, t)) {
                int anchor = id[{r, c}];
                for (int dr = 0; dr < t; ++dr)
                    for (int dc = 0; dc < t; ++dc) ds.unite(anchor, id[{r + dr, c + dc}]);
            }

    std::map<int, int> roots; // root -> component index
    std::vector<std::vector<Cell>> comps;
    for (int i = 0; i < ncells; ++i) {
        int r = ds.find(i);
        auto [it, fresh] = roots.try_emplace(r, static_cast<int>(comps.size()));
        if (fresh) comps.emplace_back();
        comps[static_cast<size_t>(it->second)].push_back(all[static_cast<size_t>(i)]);
    }

    const int nc = static_cast<int>(comps.size());
    if (nc <= 1) return {};
    require(nc <= component_cap, errc::too_many_components,
            "co-occurrence component count " + std::to_string(nc) + " exceeds cap " +
                std::to_string(component_cap));

    // component 0 goes to Z1; enumerate assignments of the rest
    for (unsigned long long mask = 0; mask + 1 < (1ull << (nc - 1)); ++mask) {
        std::vector<Cell> z1, z2;
        for (int ci = 0; ci < nc; ++ci) {
            bool to_z1 = (ci == 0) || ((mask >> (ci - 1)) & 1ull);
            auto& dst = to_z1 ? z1 : z2;
            dst.insert(dst.end(), comps[static_cast<size_t>(ci)].begin(), comps[static_cast<size_t>(ci)].end());
        }
        if (z2.empty()) continue;
        if (detail::cells_satisfy_axiom(z1, Y.rows(), Y.cols()) &&
            detail::cells_satisfy_axiom(z2, Y.rows(), Y.cols())) {
            std::sort(z1.begin(), z1.end());
            std::sort(z2.begin(), z2.end());
            return {false, std::move(z1), std::move(z2)};
        }
    }
    return {};
}

inline bool two_connected(const Ladder& Y, int component_cap = 20)
{
    return t_connectivity(Y, 2, component_cap).connected;
}

// ---------------------------------------------------------------------------
// strip_unused
// ---------------------------------------------------------------------------

struct StripResult {
    Ladder kept;
    std::vector<Cell> removed; // cells of Y meeting no t-minor, original coordinates
    bool reflected = false;    // input had k = 0 > h and was handled by reflection
};

namespace detail {

inline StripResult strip_one_sided(const Ladder& Y, int t)
{
    CornerData cd = corners(Y);
    const int k = cd.k();
    int j1 = 0, j2 = k + 1;
    for (int j = 0; j <= k + 1; ++j)
        if (cd.c(j) < t) j1 = j;
    for (int j = k + 1; j >= 0; --j)
        if (cd.d(j) < t) j2 = j;
    require(j1 < j2, errc::no_t_minor, "ladder contains no t-minors");
    const int rmax = cd.c(j2), cmax = cd.d(j1);
    std::vector<int> lo, hi;
    for (int i = 1; i <= rmax; ++i) {
        lo.push_back(Y.lo(i));
        hi.push_back(std::min(Y.hi(i), cmax));
    }
    StripResult sr{Ladder(rmax, cmax, std::move(lo), std::move(hi)), {}, false};
    for (const Cell& c : Y.cells())
        if (c.row > rmax || c.col > cmax) sr.removed.push_back(c);
    return sr;
}

} // namespace detail

/// Cut away the cells of a one-sided ladder that meet no t-minor. The kept
/// region is t-connected and the removed cells join the ring as free
/// polynomial variables. Ladders with k = 0 and h > 0 are handled through
/// reflection, with the results mapped back to the original coordinates.
inline StripResult strip_unused(const Ladder& Y, int t)
{
    require(t >= 1, errc::index_out_of_range, "t must be >= 1");
    ShapeReport sh = shape(Y);
    require(sh.one_sided || sh.is_rectangle, errc::out_of_scope, "strip_unused needs a one-sided ladder");
    CornerData cd = corners(Y);
    if (cd.h() == 0) return detail::strip_one_sided(Y, t);

    Ladder R = reflect(Y);
    StripResult inner = detail::strip_one_sided(R, t);
    // map back: reflected cell (i,j) came from (m+1-j, n+1-i)
    StripResult sr{reflect(inner.kept), {}, true};
    // reflect(kept) lives on the kept bounding box; re-crop from Y for exact coordinates
    const int m = Y.rows(), n = Y.cols();
    std::vector<Cell> removed;
    removed.reserve(inner.removed.size());
    for (const Cell& c : inner.removed) removed.push_back({m + 1 - c.col, n + 1 - c.row});
    std::sort(removed.begin(), removed.end());
    sr.removed = std::move(removed);
    return sr;
}

} // namespace ladder
