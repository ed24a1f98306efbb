#pragma once

// Shared fixtures, brute-force oracles, and random generators for the test
// suites. Oracles here must stay independent of the library's normal-form
// path: divisibility is decided by bipartite matching over quotient
// multisets, and equality by breadth-first closure under single exchanges.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ladder/classgroup.hpp"
#include "ladder/connectivity.hpp"
#include "ladder/ladder.hpp"
#include "ladder/monomial.hpp"

namespace fixtures {

using ladder::Cell;
using ladder::Ladder;

inline Ladder L() { return Ladder(5, 5, {2, 2, 1, 1, 1}, {5, 5, 3, 3, 2}); }
inline Ladder O() { return Ladder(5, 5, {1, 1, 1, 1, 1}, {5, 5, 5, 4, 3}); }
inline Ladder T() { return Ladder(5, 3, {2, 2, 1, 1, 1}, {3, 3, 3, 2, 2}); }
// 3x5, path-connected, 3-disconnected: the last column meets no 3-minor
inline Ladder Yex() { return Ladder(3, 5, {1, 1, 1}, {5, 5, 4}); }
// two 2x3 blocks, no corners at all
inline Ladder Ypp() { return Ladder(4, 6, {4, 4, 1, 1}, {6, 6, 3, 3}); }
inline Ladder rect(int m, int n)
{
    return Ladder(m, n, std::vector<int>(static_cast<size_t>(m), 1),
                  std::vector<int>(static_cast<size_t>(m), n));
}
// thin two-sided spine-shaped ladder with lambda_1 = lambda_3 = -1
inline Ladder thin6x8() { return Ladder(6, 8, {6, 4, 4, 1, 1, 1}, {8, 8, 8, 5, 5, 3}); }
// h=1, k=4, a_1 > c_1; its spine keeps one upper corner at (2,4)
inline Ladder spiny9x9()
{
    return Ladder(9, 9, {3, 3, 3, 3, 3, 3, 3, 1, 1}, {9, 9, 7, 6, 5, 4, 4, 4, 4});
}

// 102x102 staircase with 7 lower and 8 upper inside corners, transcribed
// from a picture fixture at two grid units per cell
inline Ladder big8()
{
    std::vector<Cell> lower = {{9, 57}, {17, 49}, {25, 41}, {33, 33}, {41, 25}, {51, 17}, {59, 9}};
    std::vector<Cell> upper = {{45, 94}, {50, 90}, {54, 86}, {62, 76}, {70, 68}, {78, 60}, {86, 52}, {94, 44}};
    return ladder::from_corners(102, 102, lower, upper);
}

// one-sided ladder with all inside corners on the antidiagonal row+col = s
inline std::optional<Ladder> antidiag_one_sided(int m, int n, int s)
{
    std::vector<Cell> upper;
    for (int c = 2; c < m; ++c) {
        int d = s - c;
        if (d >= 2 && d < n) upper.push_back({c, d});
    }
    if (upper.empty()) return std::nullopt;
    try {
        return ladder::from_corners(m, n, {}, upper);
    } catch (const ladder::ladder_error&) {
        return std::nullopt;
    }
}

} // namespace fixtures

namespace oracle {

using ladder::Cell;
using ladder::Ladder;
using ladder::Monomial;

using CellMultiset = std::vector<Cell>; // kept sorted

inline CellMultiset sorted(CellMultiset cs)
{
    std::sort(cs.begin(), cs.end());
    return cs;
}

/// All multisets reachable from `start` by single straightening exchanges
/// (i1<i2, j1<j2) <-> (i1,j2),(i2,j1), staying inside Y.
inline std::set<CellMultiset> exchange_closure(const Ladder& Y, const CellMultiset& start)
{
    std::set<CellMultiset> seen;
    std::vector<CellMultiset> queue{sorted(start)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        CellMultiset cur = std::move(queue.back());
        queue.pop_back();
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = 0; b < cur.size(); ++b) {
                if (a == b) continue;
                const Cell &x = cur[a], &y = cur[b];
                if (!(x.row < y.row && x.col < y.col) && !(x.row < y.row && x.col > y.col)) continue;
                Cell nx{x.row, y.col}, ny{y.row, x.col};
                if (!Y.contains(nx) || !Y.contains(ny)) continue;
                CellMultiset next = cur;
                next[a] = nx;
                next[b] = ny;
                next = sorted(next);
                if (seen.insert(next).second) queue.push_back(next);
            }
    }
    return seen;
}

inline bool bfs_equal(const Ladder& Y, const CellMultiset& a, const CellMultiset& b)
{
    if (a.size() != b.size()) return false;
    return exchange_closure(Y, a).count(sorted(b)) > 0;
}

/// Does the (rows, cols) quotient multiset admit any pairing inside Y?
/// Checked by bipartite matching, with no appeal to the sorted pairing.
inline bool pairable(const Ladder& Y, std::vector<int> rows, std::vector<int> cols)
{
    const size_t n = rows.size();
    if (cols.size() != n) return false;
    std::vector<int> match_col(n, -1);
    std::function<bool(size_t, std::vector<bool>&)> augment = [&](size_t r, std::vector<bool>& used) {
        for (size_t c = 0; c < n; ++c) {
            if (used[c] || !Y.contains(rows[r], cols[c])) continue;
            used[c] = true;
            if (match_col[c] < 0 || augment(static_cast<size_t>(match_col[c]), used)) {
                match_col[c] = static_cast<int>(r);
                return true;
            }
        }
        return false;
    };
    for (size_t r = 0; r < n; ++r) {
        std::vector<bool> used(n, false);
        if (!augment(r, used)) return false;
    }
    return true;
}

/// g divides m in R: multiset containment plus a pairable quotient.
inline bool divides(const Ladder& Y, const CellMultiset& g, const CellMultiset& m)
{
    std::vector<int> rows, cols;
    for (const Cell& c : m) {
        rows.push_back(c.row);
        cols.push_back(c.col);
    }
    for (const Cell& c : g) {
        auto rit = std::find(rows.begin(), rows.end(), c.row);
        auto cit = std::find(cols.begin(), cols.end(), c.col);
        if (rit == rows.end() || cit == cols.end()) return false;
        rows.erase(rit);
        cols.erase(cit);
    }
    return pairable(Y, rows, cols);
}

/// Membership in the e-th power of the ideal generated by `gens`, deciding
/// division by the matching oracle over every e-element generator multiset.
inline bool member_power(const Ladder& Y, const std::vector<CellMultiset>& gens, int e,
                         const CellMultiset& m)
{
    if (e == 0) return true;
    std::function<bool(size_t, int, CellMultiset&)> rec = [&](size_t from, int left, CellMultiset& acc) {
        if (left == 0) return divides(Y, acc, m);
        for (size_t g = from; g < gens.size(); ++g) {
            size_t before = acc.size();
            acc.insert(acc.end(), gens[g].begin(), gens[g].end());
            if (static_cast<int>(acc.size()) <= static_cast<int>(m.size()) && rec(g, left - 1, acc))
                return true;
            acc.resize(before);
        }
        return false;
    };
    CellMultiset acc;
    return rec(0, e, acc);
}

/// Standard monomials of R_2(Y) up to the given degree: multichains of the
/// cell poset (i,j) <= (p,q) iff i <= p and j >= q.
inline std::vector<Monomial> standard_monomials(const Ladder& Y, int max_degree)
{
    std::vector<Cell> cells = Y.cells();
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col > b.col;
    });
    std::vector<Monomial> out{Monomial()};
    std::vector<Cell> chain;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chain.size()) >= max_degree) return;
        for (size_t i = from; i < cells.size(); ++i) {
            if (!chain.empty()) {
                const Cell& last = chain.back();
                if (!(last.row <= cells[i].row && last.col >= cells[i].col)) continue;
            }
            chain.push_back(cells[i]);
            out.push_back(Monomial::from_cells(Y, chain));
            rec(i);
            chain.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Every t x t scattered minor of Y as its row and column index lists.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> scattered_minors(const Ladder& Y, int t)
{
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> rows, cols;
    std::function<void(int)> pick_cols = [&](int from) {
        if (static_cast<int>(cols.size()) == t) {
            bool full = true;
            for (int r : rows)
                for (int c : cols) full = full && Y.contains(r, c);
            if (full) out.emplace_back(rows, cols);
            return;
        }
        for (int c = from; c <= Y.cols(); ++c) {
            cols.push_back(c);
            pick_cols(c + 1);
            cols.pop_back();
        }
    };
    std::function<void(int)> pick_rows = [&](int from) {
        if (static_cast<int>(rows.size()) == t) {
            pick_cols(1);
            return;
        }
        for (int r = from; r <= Y.rows(); ++r) {
            rows.push_back(r);
            pick_rows(r + 1);
            rows.pop_back();
        }
    };
    pick_rows(1);
    return out;
}

} // namespace oracle

namespace gen {

using ladder::Cell;
using ladder::Ladder;

/// Uniform-ish random staircase ladder with the required conventions.
inline Ladder random_ladder(std::mt19937_64& rng, int max_m, int max_n)
{
    for (;;) {
        int m = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_m));
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_n));
        std::vector<int> lo(static_cast<size_t>(m)), hi(static_cast<size_t>(m));
        lo[static_cast<size_t>(m - 1)] = 1;
        for (int i = m - 1; i >= 1; --i) {
            int prev = lo[static_cast<size_t>(i)];
            int bump = static_cast<int>(rng() % 3) == 0 ? static_cast<int>(rng() % 3) : 0;
            lo[static_cast<size_t>(i - 1)] = std::min(n, prev + bump);
        }
        hi[0] = n;
        bool ok = true;
        for (int i = 1; i < m; ++i) {
            int prev = hi[static_cast<size_t>(i - 1)];
            int drop = static_cast<int>(rng() % 3) == 0 ? static_cast<int>(rng() % 3) : 0;
            hi[static_cast<size_t>(i)] = std::max(1, prev - drop);
        }
        for (int i = 0; i < m && ok; ++i) ok = lo[static_cast<size_t>(i)] <= hi[static_cast<size_t>(i)];
        if (!ok) continue;
        try {
            return Ladder(m, n, std::move(lo), std::move(hi));
        } catch (const ladder::ladder_error&) {
            continue;
        }
    }
}

template <class Pred>
inline Ladder random_ladder_where(std::mt19937_64& rng, int max_m, int max_n, Pred pred, int max_tries = 100000)
{
    for (int i = 0; i < max_tries; ++i) {
        Ladder Y = random_ladder(rng, max_m, max_n);
        if (pred(Y)) return Y;
    }
    ladder::fail(ladder::errc::internal, "random generator exhausted its tries");
}

/// All valid ladders with exactly the given dimensions (small m, n only).
inline std::vector<Ladder> all_ladders(int m, int n)
{
    std::vector<Ladder> out;
    std::vector<int> lo(static_cast<size_t>(m)), hi(static_cast<size_t>(m));
    std::function<void(int)> rec_hi = [&](int i) {
        if (i == m) {
            bool ok = true;
            for (int r = 0; r < m; ++r) ok = ok && lo[static_cast<size_t>(r)] <= hi[static_cast<size_t>(r)];
            if (!ok) return;
            try {
                out.push_back(Ladder(m, n, lo, hi));
            } catch (const ladder::ladder_error&) {
            }
            return;
        }
        int upper = i == 0 ? n : hi[static_cast<size_t>(i - 1)];
        int lower = i == 0 ? n : 1; // hi_1 = n
        for (int v = lower; v <= upper; ++v) {
            hi[static_cast<size_t>(i)] = v;
            rec_hi(i + 1);
        }
    };
    std::function<void(int)> rec_lo = [&](int i) {
        if (i < 0) {
            rec_hi(0);
            return;
        }
        int lower = i == m - 1 ? 1 : lo[static_cast<size_t>(i + 1)];
        int upper = i == m - 1 ? 1 : n;
        for (int v = lower; v <= upper; ++v) {
            lo[static_cast<size_t>(i)] = v;
            rec_lo(i - 1);
        }
    };
    rec_lo(m - 1);
    return out;
}

} // namespace gen
