#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ladder/classgroup.hpp"
#include "ladder/connectivity.hpp"
#include "ladder/ladder.hpp"

namespace ladder {

// ---------------------------------------------------------------------------
// Monomials of R_2(Y)
//
// Every 2-minor supported on Y vanishes, so a monomial is determined by its
// row multiset and column multiset. The stored normal form pairs the rows in
// ascending order with the columns in descending order; the ladder axiom
// keeps every such pair inside Y.
// ---------------------------------------------------------------------------

class Monomial {
public:
    Monomial() = default;

    static Monomial from_cells(const Ladder& Y, std::vector<Cell> cells)
    {
        for (const Cell& c : cells)
            require(Y.contains(c), errc::cell_outside_ladder,
                    "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") outside ladder");
        std::vector<int> rows, cols;
        rows.reserve(cells.size());
        cols.reserve(cells.size());
        for (const Cell& c : cells) {
            rows.push_back(c.row);
            cols.push_back(c.col);
        }
        return from_multisets(Y, std::move(rows), std::move(cols));
    }

    static Monomial from_multisets(const Ladder& Y, std::vector<int> rows, std::vector<int> cols)
    {
        require(rows.size() == cols.size(), errc::dimension_mismatch, "row/column multiset size mismatch");
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end(), std::greater<int>());
        Monomial m;
        m.cells_.reserve(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            Cell c{rows[i], cols[i]};
            require(Y.contains(c), errc::cell_outside_ladder, "straightened pair leaves the ladder");
            m.cells_.push_back(c);
        }
        return m;
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int degree() const { return static_cast<int>(cells_.size()); }
    bool is_one() const { return cells_.empty(); }

    std::vector<int> row_multiset() const
    {
        std::vector<int> r;
        r.reserve(cells_.size());
        for (const Cell& c : cells_) r.push_back(c.row);
        return r;
    }
    std::vector<int> col_multiset() const
    {
        std::vector<int> c;
        c.reserve(cells_.size());
        for (const Cell& cc : cells_) c.push_back(cc.col);
        std::sort(c.begin(), c.end());
        return c;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.cells_ <=> b.cells_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.cells_ == b.cells_; }

    std::string str() const
    {
        if (cells_.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < cells_.size(); ++i) {
            if (i) s += "*";
            s += "x[" + std::to_string(cells_[i].row) + "," + std::to_string(cells_[i].col) + "]";
        }
        return s;
    }

private:
    std::vector<Cell> cells_; // normal form: rows ascending, columns descending
};

inline Monomial normal_form(const Ladder& Y, const std::vector<Cell>& cells)
{
    return Monomial::from_cells(Y, cells);
}

inline Monomial mon_one() { return Monomial(); }

inline Monomial mon_mul(const Ladder& Y, const Monomial& a, const Monomial& b)
{
    std::vector<int> rows = a.row_multiset(), cols = a.col_multiset();
    for (const Cell& c : b.cells()) {
        rows.push_back(c.row);
        cols.push_back(c.col);
    }
    return Monomial::from_multisets(Y, std::move(rows), std::move(cols));
}

inline bool mon_equal(const Monomial& a, const Monomial& b) { return a == b; }

/// Variable x[r,c] as a monomial.
inline Monomial mon_var(const Ladder& Y, int r, int c) { return Monomial::from_cells(Y, {{r, c}}); }

inline Monomial mon_pow(const Ladder& Y, const Monomial& a, int e)
{
    require(e >= 0, errc::index_out_of_range, "negative power");
    Monomial acc;
    for (int i = 0; i < e; ++i) acc = mon_mul(Y, acc, a);
    return acc;
}

/// Number of cells of m (with multiplicity) among the generators of the
/// prime J; the straightening relations are homogeneous for this grading.
inline int grading_degree(const Ladder& Y, const Monomial& m, const DivisorialIdealSpec& spec)
{
    std::vector<Cell> gens = prime_generators(Y, spec);
    int deg = 0;
    for (const Cell& c : m.cells())
        if (std::binary_search(gens.begin(), gens.end(), c)) ++deg;
    return deg;
}

// ---------------------------------------------------------------------------
// Divisibility and ideals
// ---------------------------------------------------------------------------

/// g | m in R_2(Y): both multisets embed and the quotient multisets pair
/// into cells of Y (the sorted pairing stays in Y iff any pairing does).
inline bool mon_divides(const Ladder& Y, const Monomial& g, const Monomial& m)
{
    if (g.degree() > m.degree()) return false;
    std::vector<int> rows = m.row_multiset(), cols = m.col_multiset();
    for (const Cell& c : g.cells()) {
        auto rit = std::find(rows.begin(), rows.end(), c.row);
        if (rit == rows.end()) return false;
        rows.erase(rit);
        auto cit = std::find(cols.begin(), cols.end(), c.col);
        if (cit == cols.end()) return false;
        cols.erase(cit);
    }
    std::sort(cols.begin(), cols.end(), std::greater<int>());
    for (size_t i = 0; i < rows.size(); ++i)
        if (!Y.contains(rows[i], cols[i])) return false;
    return true;
}

inline std::optional<Monomial> mon_quotient(const Ladder& Y, const Monomial& m, const Monomial& g)
{
    if (!mon_divides(Y, g, m)) return std::nullopt;
    std::vector<int> rows = m.row_multiset(), cols = m.col_multiset();
    for (const Cell& c : g.cells()) {
        rows.erase(std::find(rows.begin(), rows.end(), c.row));
        cols.erase(std::find(cols.begin(), cols.end(), c.col));
    }
    return Monomial::from_multisets(Y, std::move(rows), std::move(cols));
}

/// Cell-wise max of the multiplicities of the two normal forms, read back
/// into R (the polynomial lcm of the canonical lifts).
inline Monomial mon_lcm(const Ladder& Y, const Monomial& a, const Monomial& b)
{
    std::map<Cell, int> mult;
    for (const Cell& c : a.cells()) mult[c]++;
    std::map<Cell, int> mb;
    for (const Cell& c : b.cells()) mb[c]++;
    for (auto& [cell, e] : mb) {
        int& cur = mult[cell];
        cur = std::max(cur, e);
    }
    std::vector<Cell> cells;
    for (auto& [cell, e] : mult)
        for (int i = 0; i < e; ++i) cells.push_back(cell);
    return Monomial::from_cells(Y, cells);
}

struct MonomialIdeal {
    std::vector<Monomial> gens; // minimal, sorted
};

inline void check_supported(const Ladder& Y)
{
    require(path_connected(Y), errc::not_supported, "monomial engine needs a path-connected ladder");
    require(two_connected(Y), errc::not_supported, "monomial engine needs a 2-connected ladder");
}

/// Drop duplicates and every generator divisible by another.
inline MonomialIdeal minimal_generators(const Ladder& Y, std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        // equal-degree division forces equality, so only proper divisors matter
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = i != j && gens[j].degree() < gens[i].degree() && mon_divides(Y, gens[j], gens[i]);
        if (!redundant) keep.push_back(gens[i]);
    }
    return {std::move(keep)};
}

inline bool membership(const Ladder& Y, const Monomial& m, const MonomialIdeal& I)
{
    for (const Monomial& g : I.gens)
        if (mon_divides(Y, g, m)) return true;
    return false;
}

inline MonomialIdeal ideal_from_cells(const Ladder& Y, const std::vector<Cell>& cells)
{
    std::vector<Monomial> gens;
    gens.reserve(cells.size());
    for (const Cell& c : cells) gens.push_back(mon_var(Y, c.row, c.col));
    return minimal_generators(Y, std::move(gens));
}

inline MonomialIdeal prime_ideal(const Ladder& Y, const DivisorialIdealSpec& spec)
{
    return ideal_from_cells(Y, prime_generators(Y, spec));
}

inline MonomialIdeal ideal_power(const Ladder& Y, const MonomialIdeal& I, int e)
{
    check_supported(Y);
    require(e >= 0, errc::index_out_of_range, "negative ideal power");
    if (e == 0) return {{mon_one()}};
    std::set<Monomial> acc(I.gens.begin(), I.gens.end());
    for (int step = 1; step < e; ++step) {
        std::set<Monomial> next;
        for (const Monomial& a : acc)
            for (const Monomial& g : I.gens) next.insert(mon_mul(Y, a, g));
        acc = std::move(next);
    }
    return minimal_generators(Y, {acc.begin(), acc.end()});
}

inline MonomialIdeal ideal_intersect_pair(const Ladder& Y, const MonomialIdeal& A, const MonomialIdeal& B)
{
    std::vector<Monomial> lcms;
    lcms.reserve(A.gens.size() * B.gens.size());
    for (const Monomial& a : A.gens)
        for (const Monomial& b : B.gens) lcms.push_back(mon_lcm(Y, a, b));
    return minimal_generators(Y, std::move(lcms));
}

inline MonomialIdeal ideal_intersect(const Ladder& Y, const std::vector<MonomialIdeal>& ideals)
{
    check_supported(Y);
    require(!ideals.empty(), errc::index_out_of_range, "empty intersection");
    MonomialIdeal acc = ideals[0];
    for (size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect_pair(Y, ideals[i], acc);
    return acc;
}

/// Concrete ideal representing the effective class sum(e * [spec]):
/// intersection of the listed prime powers (symbolic = ordinary here).
inline MonomialIdeal class_representative(const Ladder& Y,
                                          const std::vector<std::pair<DivisorialIdealSpec, int>>& combo)
{
    check_supported(Y);
    std::vector<MonomialIdeal> parts;
    for (const auto& [spec, e] : combo) {
        require(e >= 0, errc::index_out_of_range, "negative exponent in class representative");
        if (e == 0) continue;
        parts.push_back(ideal_power(Y, prime_ideal(Y, spec), e));
    }
    if (parts.empty()) return {{mon_one()}};
    return ideal_intersect(Y, parts);
}

// ---------------------------------------------------------------------------
// Polynomial elements (integer coefficients suffice for all witnesses)
// ---------------------------------------------------------------------------

class PolyElement {
public:
    PolyElement() = default;
    explicit PolyElement(const Monomial& m, long long c = 1)
    {
        if (c != 0) terms_[m] = c;
    }

    static PolyElement zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }

    PolyElement& add(const Monomial& m, long long c)
    {
        if (c == 0) return *this;
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_[m] = c;
        else if ((it->second += c) == 0)
            terms_.erase(it);
        return *this;
    }

    PolyElement& operator+=(const PolyElement& o)
    {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    friend PolyElement mul(const Ladder& Y, const PolyElement& a, const PolyElement& b)
    {
        PolyElement out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add(mon_mul(Y, ma, mb), ca * cb);
        return out;
    }

    /// Nonzero single-term content, if any.
    std::optional<std::pair<Monomial, long long>> single_term() const
    {
        if (terms_.size() != 1) return std::nullopt;
        return *terms_.begin();
    }

private:
    std::map<Monomial, long long> terms_;
};

struct SignedMonomialMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<PolyElement> entries; // row-major

    PolyElement& at(size_t r, size_t c) { return entries.at(r * cols + c); }
    const PolyElement& at(size_t r, size_t c) const { return entries.at(r * cols + c); }

    static SignedMonomialMatrix zeros(size_t r, size_t c)
    {
        return {r, c, std::vector<PolyElement>(r * c)};
    }
};

// ---------------------------------------------------------------------------
// Proof-level witnesses
// ---------------------------------------------------------------------------

struct CollisionWitness {
    Monomial m1, m2;   // generators of A and B
    Monomial m1p, m2p; // a different ordered pair with the same product
};

/// First pair collision of the multiplication map on generators, scanning in
/// lexicographic order. A collision exhibits non-injectivity of A (x) B -> AB.
inline std::optional<CollisionWitness> multiplication_collision(const Ladder& Y, const MonomialIdeal& A,
                                                                const MonomialIdeal& B)
{
    std::map<Monomial, std::pair<size_t, size_t>> seen;
    for (size_t i = 0; i < A.gens.size(); ++i)
        for (size_t j = 0; j < B.gens.size(); ++j) {
            Monomial prod = mon_mul(Y, A.gens[i], B.gens[j]);
            auto [it, fresh] = seen.try_emplace(prod, i, j);
            if (!fresh) {
                auto [i0, j0] = it->second;
                return CollisionWitness{A.gens[i0], B.gens[j0], A.gens[i], B.gens[j]};
            }
        }
    return std::nullopt;
}

struct LcmMapReport {
    bool injective = true;
    bool image_minimal = true;
    std::optional<CollisionWitness> injectivity_witness;
    std::optional<Monomial> offending_lcm;           // an lcm inside m * (A cap B)
    std::optional<std::pair<Monomial, Monomial>> offending_pair;
};

/// Behaviour of lcm : mingen(A) x mingen(B) -> A cap B. When A (x) B is the
/// canonical module the image must be a minimal generating set; an lcm that
/// is a variable multiple of another lcm refutes that.
inline LcmMapReport lcm_map_analysis(const Ladder& Y, const MonomialIdeal& A, const MonomialIdeal& B)
{
    LcmMapReport rep;
    std::map<Monomial, std::pair<size_t, size_t>> seen;
    std::vector<Monomial> image;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < A.gens.size(); ++i)
        for (size_t j = 0; j < B.gens.size(); ++j) {
            Monomial l = mon_lcm(Y, A.gens[i], B.gens[j]);
            auto [it, fresh] = seen.try_emplace(l, i, j);
            if (!fresh && rep.injective) {
                rep.injective = false;
                auto [i0, j0] = it->second;
                rep.injectivity_witness = CollisionWitness{A.gens[i0], B.gens[j0], A.gens[i], B.gens[j]};
            }
            image.push_back(l);
            pairs.emplace_back(i, j);
        }
    for (size_t t = 0; t < image.size() && rep.image_minimal; ++t) {
        for (const Monomial& other : image) {
            if (other.degree() >= image[t].degree()) continue;
            auto q = mon_quotient(Y, image[t], other);
            if (q && q->degree() >= 1) {
                rep.image_minimal = false;
                rep.offending_lcm = image[t];
                rep.offending_pair = {A.gens[pairs[t].first], B.gens[pairs[t].second]};
                break;
            }
        }
    }
    return rep;
}

struct KernelWitnessReport {
    bool in_kernel = false;
    bool coordinate_minimal = false;
};

/// m is a minimal generator of the ambient ideal (member, but not a variable
/// multiple of a generator).
inline bool minimal_in(const Ladder& Y, const Monomial& m, const MonomialIdeal& ambient)
{
    if (!membership(Y, m, ambient)) return false;
    for (const Monomial& g : ambient.gens) {
        auto q = mon_quotient(Y, m, g);
        if (q && q->degree() >= 1) return false;
    }
    return true;
}

/// D * v = 0 in R_2(Y), with v's coordinates read in `ambient` (the module
/// the resolution was tensored with).
inline KernelWitnessReport check_kernel_witness(const Ladder& Y, const SignedMonomialMatrix& D,
                                                const std::vector<PolyElement>& v,
                                                const MonomialIdeal& ambient)
{
    require(D.cols == v.size(), errc::dimension_mismatch, "matrix/vector size mismatch");
    KernelWitnessReport rep;
    rep.in_kernel = true;
    for (size_t r = 0; r < D.rows; ++r) {
        PolyElement acc;
        for (size_t c = 0; c < D.cols; ++c) acc += mul(Y, D.at(r, c), v[c]);
        if (!acc.is_zero()) {
            rep.in_kernel = false;
            break;
        }
    }
    for (const PolyElement& coord : v) {
        auto t = coord.single_term();
        if (t && minimal_in(Y, t->first, ambient)) {
            rep.coordinate_minimal = true;
            break;
        }
    }
    return rep;
}

} // namespace ladder
