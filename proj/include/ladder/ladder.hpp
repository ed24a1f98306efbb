#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ladder/errors.hpp"

namespace ladder {

/// Grid position, 1-based. Row index grows downward, column index rightward.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Staircase region of an m x n grid: row i occupies columns [lo_i, hi_i].
/// Both boundaries are nonincreasing, hi_1 = n and lo_m = 1, so the region
/// contains the top-right and bottom-left grid corners and meets every row
/// and column.
class Ladder {
public:
    Ladder() = default;

    /// Validates all invariants; throws NotALadder / ConventionViolation.
    Ladder(int m, int n, std::vector<int> lo, std::vector<int> hi)
        : m_(m), n_(n), lo_(std::move(lo)), hi_(std::move(hi))
    {
        validate();
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int lo(int i) const { return lo_.at(static_cast<size_t>(i - 1)); }
    int hi(int i) const { return hi_.at(static_cast<size_t>(i - 1)); }
    const std::vector<int>& lo_bounds() const { return lo_; }
    const std::vector<int>& hi_bounds() const { return hi_; }

    bool contains(int row, int col) const
    {
        return row >= 1 && row <= m_ && col >= lo(row) && col <= hi(row);
    }
    bool contains(const Cell& c) const { return contains(c.row, c.col); }

    long long cell_count() const
    {
        long long total = 0;
        for (int i = 1; i <= m_; ++i) total += hi(i) - lo(i) + 1;
        return total;
    }

    std::vector<Cell> cells() const
    {
        std::vector<Cell> out;
        out.reserve(static_cast<size_t>(cell_count()));
        for (int i = 1; i <= m_; ++i)
            for (int j = lo(i); j <= hi(i); ++j) out.push_back({i, j});
        return out;
    }

    friend bool operator==(const Ladder& a, const Ladder& b)
    {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    void validate()
    {
        require(m_ >= 1 && n_ >= 1, errc::not_a_ladder, "grid dimensions must be positive");
        require(lo_.size() == static_cast<size_t>(m_) && hi_.size() == static_cast<size_t>(m_),
                errc::not_a_ladder, "bound arrays must have one entry per row");
        for (int i = 1; i <= m_; ++i) {
            require(lo(i) >= 1 && hi(i) <= n_, errc::not_a_ladder, "row bounds outside grid");
            require(lo(i) <= hi(i), errc::convention_violation, "empty row " + std::to_string(i));
        }
        for (int i = 1; i < m_; ++i) {
            // nonincreasing bounds are forced by the ladder axiom on interval rows
            require(lo(i) >= lo(i + 1) && hi(i) >= hi(i + 1), errc::not_a_ladder,
                    "row intervals violate the ladder axiom");
        }
        require(hi(1) == n_, errc::convention_violation, "top row must reach column n");
        require(lo(m_) == 1, errc::convention_violation, "bottom row must reach column 1");
        for (int q = 1; q <= n_; ++q) {
            bool hit = false;
            for (int i = 1; i <= m_ && !hit; ++i) hit = contains(i, q);
            require(hit, errc::convention_violation, "empty column " + std::to_string(q));
        }
    }

    int m_ = 0;
    int n_ = 0;
    std::vector<int> lo_;
    std::vector<int> hi_;
};

/// Inside corners with sentinels. Lower corner (a,b): the region steps left
/// below row a-1. Upper corner (c,d): the region steps in from the right
/// below row c. Sentinels (1,n) and (m,1) are stored implicitly and
/// addressable through a()/b()/c()/d() at indices 0 and h+1 (resp. k+1).
struct CornerData {
    int m = 0;
    int n = 0;
    std::vector<Cell> lower; // (a_i, b_i), i = 1..h
    std::vector<Cell> upper; // (c_j, d_j), j = 1..k

    int h() const { return static_cast<int>(lower.size()); }
    int k() const { return static_cast<int>(upper.size()); }

    int a(int i) const
    {
        if (i == 0) return 1;
        if (i == h() + 1) return m;
        return lower.at(static_cast<size_t>(i - 1)).row;
    }
    int b(int i) const
    {
        if (i == 0) return n;
        if (i == h() + 1) return 1;
        return lower.at(static_cast<size_t>(i - 1)).col;
    }
    int c(int j) const
    {
        if (j == 0) return 1;
        if (j == k() + 1) return m;
        return upper.at(static_cast<size_t>(j - 1)).row;
    }
    int d(int j) const
    {
        if (j == 0) return n;
        if (j == k() + 1) return 1;
        return upper.at(static_cast<size_t>(j - 1)).col;
    }
};

inline CornerData corners(const Ladder& Y)
{
    CornerData cd;
    cd.m = Y.rows();
    cd.n = Y.cols();
    for (int i = 1; i < Y.rows(); ++i) {
        // a step yields an inside corner only when the corner cell is in Y
        if (Y.lo(i) > Y.lo(i + 1) && Y.lo(i) <= Y.hi(i + 1)) cd.lower.push_back({i + 1, Y.lo(i)});
        if (Y.hi(i) > Y.hi(i + 1) && Y.hi(i + 1) >= Y.lo(i)) cd.upper.push_back({i, Y.hi(i + 1)});
    }
    return cd;
}

/// Rebuild the row intervals of a ladder from prescribed inside corners.
/// Throws if the corner lists are not a valid interleaving.
inline Ladder from_corners(int m, int n, const std::vector<Cell>& lower, const std::vector<Cell>& upper)
{
    CornerData cd;
    cd.m = m;
    cd.n = n;
    cd.lower = lower;
    cd.upper = upper;
    std::vector<int> lo(static_cast<size_t>(m)), hi(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        int u = 1;
        while (u <= cd.h() && cd.a(u) <= i) ++u; // first lower corner strictly below row i
        lo[static_cast<size_t>(i - 1)] = (i == m) ? 1 : cd.b(u);
        int v = 0;
        while (v + 1 <= cd.k() && cd.c(v + 1) < i) ++v; // last upper corner strictly above row i
        hi[static_cast<size_t>(i - 1)] = cd.d(v);
    }
    Ladder Y(m, n, std::move(lo), std::move(hi));
    CornerData back = corners(Y);
    require(back.lower == lower && back.upper == upper, errc::not_a_ladder,
            "corner lists do not describe a ladder");
    return Y;
}

// ---------------------------------------------------------------------------
// Parsing and rendering
// ---------------------------------------------------------------------------

namespace detail {

/// Ladder axiom on a raw cell set: occupied (i,j),(p,q) with i<=p, j<=q force
/// (i,q),(p,j). Works row-pair-wise on column masks.
inline bool axiom_holds(const std::vector<std::vector<bool>>& occ)
{
    const int m = static_cast<int>(occ.size());
    if (m == 0) return true;
    const int n = static_cast<int>(occ[0].size());
    std::vector<int> mn(static_cast<size_t>(m), n + 1), mx(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (occ[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                mn[static_cast<size_t>(i)] = std::min(mn[static_cast<size_t>(i)], j + 1);
                mx[static_cast<size_t>(i)] = std::max(mx[static_cast<size_t>(i)], j + 1);
            }
    for (int i = 0; i < m; ++i) {
        if (mx[static_cast<size_t>(i)] == 0) continue;
        for (int p = i + 1; p < m; ++p) {
            if (mx[static_cast<size_t>(p)] == 0) continue;
            for (int q = 1; q <= n; ++q) {
                bool top = occ[static_cast<size_t>(i)][static_cast<size_t>(q - 1)];
                bool bot = occ[static_cast<size_t>(p)][static_cast<size_t>(q - 1)];
                // cells of row p at or past min(row i) must appear in row i, and
                // cells of row i at or before max(row p) must appear in row p
                if (bot && q >= mn[static_cast<size_t>(i)] && !top) return false;
                if (top && q <= mx[static_cast<size_t>(p)] && !bot) return false;
            }
        }
    }
    return true;
}

} // namespace detail

/// Parse the '#'/'.' grid format; short lines are padded with '.'.
inline Ladder parse_grid(const std::string& text)
{
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    require(!lines.empty(), errc::not_a_ladder, "empty grid");

    const int m = static_cast<int>(lines.size());
    size_t width = 0;
    for (auto& l : lines) width = std::max(width, l.size());
    require(width > 0, errc::not_a_ladder, "empty grid");
    const int n = static_cast<int>(width);

    std::vector<std::vector<bool>> occ(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < m; ++i) {
        for (size_t j = 0; j < lines[static_cast<size_t>(i)].size(); ++j) {
            char ch = lines[static_cast<size_t>(i)][j];
            if (ch == '#')
                occ[static_cast<size_t>(i)][j] = true;
            else
                require(ch == '.', errc::not_a_ladder,
                        std::string("unexpected character '") + ch + "' in grid");
        }
    }

    require(detail::axiom_holds(occ), errc::not_a_ladder, "cell set violates the ladder axiom");

    std::vector<int> lo(static_cast<size_t>(m)), hi(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int first = 0, last = 0, count = 0;
        for (int j = 1; j <= n; ++j)
            if (occ[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]) {
                if (first == 0) first = j;
                last = j;
                ++count;
            }
        require(count > 0, errc::convention_violation, "empty row " + std::to_string(i + 1));
        require(count == last - first + 1, errc::non_standard_shape,
                "row " + std::to_string(i + 1) + " is not a column interval");
        lo[static_cast<size_t>(i)] = first;
        hi[static_cast<size_t>(i)] = last;
    }
    return Ladder(m, n, std::move(lo), std::move(hi));
}

inline std::string render_grid(const Ladder& Y)
{
    std::string out;
    for (int i = 1; i <= Y.rows(); ++i) {
        for (int j = 1; j <= Y.cols(); ++j) out.push_back(Y.contains(i, j) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path components
// ---------------------------------------------------------------------------

struct PathComponent {
    int row_begin = 0; // inclusive, in the original row indexing
    int row_end = 0;   // inclusive
    int col_begin = 0; // bounding-box offset of the cropped ladder
    int col_end = 0;
    Ladder cropped; // re-validated on its own bounding box
};

/// Components of the 4-adjacency relation. Rows i, i+1 touch iff their
/// intervals overlap, which for staircase bounds is lo_i <= hi_{i+1}.
inline std::vector<PathComponent> path_components(const Ladder& Y)
{
    std::vector<PathComponent> out;
    int start = 1;
    for (int i = 1; i <= Y.rows(); ++i) {
        bool brk = (i == Y.rows()) || Y.lo(i) > Y.hi(i + 1);
        if (!brk) continue;
        PathComponent pc;
        pc.row_begin = start;
        pc.row_end = i;
        pc.col_begin = Y.lo(i);
        pc.col_end = Y.hi(start);
        std::vector<int> lo, hi;
        for (int r = start; r <= i; ++r) {
            lo.push_back(Y.lo(r) - pc.col_begin + 1);
            hi.push_back(Y.hi(r) - pc.col_begin + 1);
        }
        pc.cropped = Ladder(i - start + 1, pc.col_end - pc.col_begin + 1, std::move(lo), std::move(hi));
        out.push_back(std::move(pc));
        start = i + 1;
    }
    return out;
}

inline bool path_connected(const Ladder& Y)
{
    for (int i = 1; i < Y.rows(); ++i)
        if (Y.lo(i) > Y.hi(i + 1)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Reflection along the antidiagonal
// ---------------------------------------------------------------------------

/// The reflected ladder occupies (i,j) iff (m+1-j, n+1-i) lies in Y.
/// Lower and upper corner lists swap roles, corner (x,y) -> (n+1-y, m+1-x).
inline Ladder reflect(const Ladder& Y)
{
    const int m = Y.rows(), n = Y.cols();
    std::vector<int> lo(static_cast<size_t>(n), 0), hi(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int first = 0, last = 0;
        for (int j = 1; j <= m; ++j) {
            if (Y.contains(m + 1 - j, n + 1 - i)) {
                if (first == 0) first = j;
                last = j;
            }
        }
        require(first != 0, errc::internal, "reflection produced an empty row");
        lo[static_cast<size_t>(i - 1)] = first;
        hi[static_cast<size_t>(i - 1)] = last;
    }
    return Ladder(n, m, std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------------------
// Localization deletion moves
// ---------------------------------------------------------------------------

enum class MoveKind { InvertA0B1, InvertAhBh1, InvertC1D0, InvertCk1Dk };

inline const char* move_name(MoveKind mv)
{
    switch (mv) {
        case MoveKind::InvertA0B1: return "InvertA0B1";
        case MoveKind::InvertAhBh1: return "InvertAhBh1";
        case MoveKind::InvertC1D0: return "InvertC1D0";
        case MoveKind::InvertCk1Dk: return "InvertCk1Dk";
    }
    return "?";
}

struct DeleteResult {
    Ladder result;
    // old 1-based index -> new 1-based index, or 0 when deleted
    std::vector<int> row_map;
    std::vector<int> col_map;
    int row_begin = 0, row_end = 0; // kept ranges in old indexing
    int col_begin = 0, col_end = 0;
};

/// Crop to kept row range [r1,r2] and column range [s1,s2]; the kept ranges
/// of the four moves always produce a valid ladder.
inline DeleteResult crop(const Ladder& Y, int r1, int r2, int s1, int s2)
{
    std::vector<int> lo, hi;
    for (int i = r1; i <= r2; ++i) {
        int a = std::max(Y.lo(i), s1), b = std::min(Y.hi(i), s2);
        require(a <= b, errc::internal, "crop produced an empty row");
        lo.push_back(a - s1 + 1);
        hi.push_back(b - s1 + 1);
    }
    DeleteResult dr{Ladder(r2 - r1 + 1, s2 - s1 + 1, std::move(lo), std::move(hi)),
                    std::vector<int>(static_cast<size_t>(Y.rows()), 0),
                    std::vector<int>(static_cast<size_t>(Y.cols()), 0),
                    r1, r2, s1, s2};
    for (int i = r1; i <= r2; ++i) dr.row_map[static_cast<size_t>(i - 1)] = i - r1 + 1;
    for (int j = s1; j <= s2; ++j) dr.col_map[static_cast<size_t>(j - 1)] = j - s1 + 1;
    return dr;
}

/// The variable inverted by a move, in original coordinates.
inline Cell move_pivot(const CornerData& cd, MoveKind mv)
{
    switch (mv) {
        case MoveKind::InvertA0B1: return {cd.a(0), cd.b(1)};
        case MoveKind::InvertAhBh1: return {cd.a(cd.h()), cd.b(cd.h() + 1)};
        case MoveKind::InvertC1D0: return {cd.c(1), cd.d(0)};
        case MoveKind::InvertCk1Dk: return {cd.c(cd.k() + 1), cd.d(cd.k())};
    }
    fail(errc::internal, "bad move");
}

inline DeleteResult delete_move(const Ladder& Y, MoveKind mv)
{
    CornerData cd = corners(Y);
    const int h = cd.h(), k = cd.k();
    switch (mv) {
        case MoveKind::InvertA0B1:
            require(h >= 1, errc::missing_corner, "no lower inside corner");
            return crop(Y, cd.a(1), Y.rows(), 1, cd.b(1));
        case MoveKind::InvertAhBh1:
            require(h >= 1, errc::missing_corner, "no lower inside corner");
            return crop(Y, 1, cd.a(h), cd.b(h), Y.cols());
        case MoveKind::InvertC1D0:
            require(k >= 1, errc::missing_corner, "no upper inside corner");
            return crop(Y, cd.c(1), Y.rows(), 1, cd.d(1));
        case MoveKind::InvertCk1Dk:
            require(k >= 1, errc::missing_corner, "no upper inside corner");
            return crop(Y, 1, cd.c(k), cd.d(k), Y.cols());
    }
    fail(errc::internal, "bad move");
}

// ---------------------------------------------------------------------------
// Corner window indices
// ---------------------------------------------------------------------------

/// eta1 = min{j : b_j <= d_k}, eta2 = max{i : a_i <= c_1},
/// kappa1 = min{i : c_i >= a_h}, kappa2 = max{j : d_j >= b_1};
/// all over sentinel-inclusive index ranges, so they are always defined.
struct EtaKappa {
    int eta1 = 0;
    int eta2 = 0;
    int kappa1 = 0;
    int kappa2 = 0;
};

inline EtaKappa eta_kappa(const CornerData& cd)
{
    const int h = cd.h(), k = cd.k();
    EtaKappa ek;
    ek.eta1 = h + 1;
    for (int j = 0; j <= h + 1; ++j)
        if (cd.b(j) <= cd.d(k)) {
            ek.eta1 = j;
            break;
        }
    ek.eta2 = 0;
    for (int i = 0; i <= h + 1; ++i)
        if (cd.a(i) <= cd.c(1)) ek.eta2 = i;
    ek.kappa1 = k + 1;
    for (int i = 0; i <= k + 1; ++i)
        if (cd.c(i) >= cd.a(h)) {
            ek.kappa1 = i;
            break;
        }
    ek.kappa2 = 0;
    for (int j = 0; j <= k + 1; ++j)
        if (cd.d(j) >= cd.b(1)) ek.kappa2 = j;
    return ek;
}

inline EtaKappa eta_kappa(const Ladder& Y) { return eta_kappa(corners(Y)); }

// ---------------------------------------------------------------------------
// Shape predicates
// ---------------------------------------------------------------------------

struct ShapeReport {
    bool path_connected = false;
    bool one_sided = false;
    bool two_sided = false;
    bool coincidental_corners = false;
    bool thick = false; // (a_i,b_i) < (c_j,d_j) componentwise-and-strictly, all pairs
    bool thin = false;  // (a_i,b_i) not<= (c_j,d_j), all pairs
    bool is_spine = false;
    bool is_rectangle = false;
};

namespace detail {

inline bool leq(const Cell& x, const Cell& y) { return x.row <= y.row && x.col <= y.col; }

inline bool spine_pattern(const CornerData& cd)
{
    const int h = cd.h(), k = cd.k();
    auto alternates = [&](bool lower_first) {
        // strict interleaving of rows, and of columns, in the given order
        std::vector<int> rows, cols;
        int i = 1, j = 1;
        bool take_lower = lower_first;
        while (i <= h || j <= k) {
            if (take_lower) {
                if (i > h) return false;
                rows.push_back(cd.a(i));
                cols.push_back(cd.b(i));
                ++i;
            } else {
                if (j > k) return false;
                rows.push_back(cd.c(j));
                cols.push_back(cd.d(j));
                ++j;
            }
            take_lower = !take_lower;
        }
        for (size_t t = 1; t < rows.size(); ++t)
            if (rows[t] <= rows[t - 1] || cols[t] >= cols[t - 1]) return false;
        return true;
    };
    if (h == k && h >= 1) return alternates(true) || alternates(false);
    if (h == k + 1) return alternates(true);
    if (k == h + 1) return alternates(false);
    return false;
}

} // namespace detail

inline ShapeReport shape(const Ladder& Y)
{
    CornerData cd = corners(Y);
    ShapeReport r;
    r.path_connected = path_connected(Y);
    r.one_sided = r.path_connected && (cd.h() == 0 || cd.k() == 0);
    r.two_sided = r.path_connected && cd.h() > 0 && cd.k() > 0;
    r.is_rectangle = cd.h() == 0 && cd.k() == 0 && r.path_connected && Y.lo(1) == 1 && Y.hi(Y.rows()) == Y.cols();
    r.thick = true;
    r.thin = true;
    for (const Cell& lc : cd.lower)
        for (const Cell& uc : cd.upper) {
            if (lc == uc) r.coincidental_corners = true;
            if (!(detail::leq(lc, uc) && lc != uc)) r.thick = false;
            if (detail::leq(lc, uc)) r.thin = false;
        }
    r.is_spine = r.two_sided && detail::spine_pattern(cd);
    return r;
}

} // namespace ladder
