#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ladder/connectivity.hpp"
#include "ladder/hermite.hpp"
#include "ladder/ladder.hpp"

namespace ladder {

/// Element of Cl(R_2(Y)) in the fixed basis (q_1..q_{h+1}, p_1..p_k).
struct DivisorClass {
    int h = 0;
    int k = 0;
    ZVec coeffs; // length h+k+2? no: h+k+1

    DivisorClass() = default;
    DivisorClass(int h_, int k_) : h(h_), k(k_), coeffs(static_cast<size_t>(h_ + k_ + 1), 0) {}

    int rank() const { return h + k + 1; }
    long long& q(int i) { return coeffs.at(static_cast<size_t>(i - 1)); }
    long long q(int i) const { return coeffs.at(static_cast<size_t>(i - 1)); }
    long long& p(int j) { return coeffs.at(static_cast<size_t>(h + j)); }
    long long p(int j) const { return coeffs.at(static_cast<size_t>(h + j)); }

    bool is_zero() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](long long v) { return v == 0; });
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    DivisorClass& operator+=(const DivisorClass& o)
    {
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o)
    {
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(long long s, DivisorClass a)
    {
        for (auto& v : a.coeffs) v *= s;
        return a;
    }
};

struct ClassGroupDescriptor {
    int h = 0;
    int k = 0;
    int rank = 0;
    std::vector<std::string> basis; // "q1".."q{h+1}", "p1".."pk"
};

inline void require_two_connected(const Ladder& Y, const char* who)
{
    require(two_connected(Y), errc::not_2_connected, std::string(who) + " needs a 2-connected ladder");
}

inline ClassGroupDescriptor class_group(const Ladder& Y)
{
    require_two_connected(Y, "class_group");
    CornerData cd = corners(Y);
    ClassGroupDescriptor d{cd.h(), cd.k(), cd.h() + cd.k() + 1, {}};
    for (int i = 1; i <= d.h + 1; ++i) d.basis.push_back("q" + std::to_string(i));
    for (int j = 1; j <= d.k; ++j) d.basis.push_back("p" + std::to_string(j));
    return d;
}

// ---------------------------------------------------------------------------
// Canonical class
// ---------------------------------------------------------------------------

struct CanonicalData {
    ZVec lambda;         // lambda_i = a_i + b_i - a_{i-1} - b_{i-1}, i = 1..h+1
    ZVec delta;          // delta_j = a_{i_j} + b_{i_j} - c_j - d_j, j = 1..k
    std::vector<int> ij; // i_j = min{i : a_i > c_j}
};

inline CanonicalData canonical_data(const CornerData& cd)
{
    CanonicalData out;
    for (int i = 1; i <= cd.h() + 1; ++i) out.lambda.push_back(cd.a(i) + cd.b(i) - cd.a(i - 1) - cd.b(i - 1));
    for (int j = 1; j <= cd.k(); ++j) {
        int i = 1;
        while (cd.a(i) <= cd.c(j)) ++i;
        out.ij.push_back(i);
        out.delta.push_back(cd.a(i) + cd.b(i) - cd.c(j) - cd.d(j));
    }
    return out;
}

inline std::pair<CanonicalData, DivisorClass> canonical_class(const Ladder& Y)
{
    require_two_connected(Y, "canonical_class");
    CornerData cd = corners(Y);
    CanonicalData data = canonical_data(cd);
    DivisorClass w(cd.h(), cd.k());
    for (int i = 1; i <= cd.h() + 1; ++i) w.q(i) = data.lambda[static_cast<size_t>(i - 1)];
    for (int j = 1; j <= cd.k(); ++j) w.p(j) = data.delta[static_cast<size_t>(j - 1)];
    return {std::move(data), std::move(w)};
}

/// [q_i'] = -[q_i] - sum_{j in I_i} [p_j], I_i = {j : a_{i-1} <= c_j, b_i <= d_j}.
inline DivisorClass qprime_class(const Ladder& Y, int i)
{
    CornerData cd = corners(Y);
    require(i >= 1 && i <= cd.h() + 1, errc::index_out_of_range, "qprime index out of range");
    DivisorClass v(cd.h(), cd.k());
    v.q(i) = -1;
    for (int j = 1; j <= cd.k(); ++j)
        if (cd.a(i - 1) <= cd.c(j) && cd.b(i) <= cd.d(j)) v.p(j) = -1;
    return v;
}

// ---------------------------------------------------------------------------
// Divisorial ideal generators
// ---------------------------------------------------------------------------

enum class PrimeKind { P, Q, Qprime };

struct DivisorialIdealSpec {
    PrimeKind kind = PrimeKind::Q;
    int index = 1;
};

/// Generator cells of the height-1 primes: P(j) is the upper-corner cut
/// {(p,q) in Y : p <= c_j, q <= d_j} (indices 0..k+1 allowed; the sentinels
/// give the full first row resp. first column); Q(i) is row a_{i-1};
/// Qprime(i) is column b_i.
inline std::vector<Cell> prime_generators(const Ladder& Y, const DivisorialIdealSpec& spec)
{
    CornerData cd = corners(Y);
    std::vector<Cell> out;
    switch (spec.kind) {
        case PrimeKind::P: {
            require(spec.index >= 0 && spec.index <= cd.k() + 1, errc::index_out_of_range, "P index");
            int c = cd.c(spec.index), d = cd.d(spec.index);
            for (int p = 1; p <= std::min(c, Y.rows()); ++p)
                for (int q = Y.lo(p); q <= std::min(d, Y.hi(p)); ++q) out.push_back({p, q});
            break;
        }
        case PrimeKind::Q: {
            require(spec.index >= 1 && spec.index <= cd.h() + 1, errc::index_out_of_range, "Q index");
            int r = cd.a(spec.index - 1);
            for (int q = Y.lo(r); q <= Y.hi(r); ++q) out.push_back({r, q});
            break;
        }
        case PrimeKind::Qprime: {
            require(spec.index >= 1 && spec.index <= cd.h() + 1, errc::index_out_of_range, "Q' index");
            int col = cd.b(spec.index);
            for (int p = 1; p <= Y.rows(); ++p)
                if (Y.contains(p, col)) out.push_back({p, col});
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Facet model of Cl(R_2(Y))
//
// R_2(Y) is the affine semigroup ring spanned by u_p v_q over the cells of Y
// (monomials are row/column multisets). Its height-1 monomial primes are the
// facets of the cell cone: one per row, one per column, and one cut per
// inside corner. Divisors of variables give the presentation
//   [row p] + [col q] + sum_{(a_i,b_i)<=(p,q)} [L_i] + sum_{(p,q)<=(c_j,d_j)} [U_j] = 0,
// and (q_i, p_j) = (row a_{i-1}, U_j) is a basis of the quotient.
// ---------------------------------------------------------------------------

class FacetModel {
public:
    struct Facet {
        enum class Kind { Row, Col, Lower, Upper };
        Kind kind;
        int index; // row/col number, or corner index (1-based)
    };

    explicit FacetModel(const Ladder& Y) : Y_(Y), cd_(corners(Y))
    {
        require_two_connected(Y, "facet model");
        for (int r = 1; r <= Y.rows(); ++r) facets_.push_back({Facet::Kind::Row, r});
        for (int c = 1; c <= Y.cols(); ++c) facets_.push_back({Facet::Kind::Col, c});
        for (int i = 1; i <= cd_.h(); ++i) facets_.push_back({Facet::Kind::Lower, i});
        for (int j = 1; j <= cd_.k(); ++j) facets_.push_back({Facet::Kind::Upper, j});
        solve_classes();
    }

    const Ladder& ladder() const { return Y_; }
    const CornerData& corner_data() const { return cd_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// Valuation of the variable at `cell` along a facet prime.
    long long valuation(const Facet& f, const Cell& cell) const
    {
        switch (f.kind) {
            case Facet::Kind::Row: return cell.row == f.index ? 1 : 0;
            case Facet::Kind::Col: return cell.col == f.index ? 1 : 0;
            case Facet::Kind::Lower:
                return (cd_.a(f.index) <= cell.row && cd_.b(f.index) <= cell.col) ? 1 : 0;
            case Facet::Kind::Upper:
                return (cell.row <= cd_.c(f.index) && cell.col <= cd_.d(f.index)) ? 1 : 0;
        }
        return 0;
    }

    DivisorClass facet_class(size_t facet_idx) const { return classes_.at(facet_idx); }

    DivisorClass class_of_row(int r) const { return classes_.at(static_cast<size_t>(r - 1)); }
    DivisorClass class_of_col(int c) const { return classes_.at(static_cast<size_t>(Y_.rows() + c - 1)); }
    DivisorClass class_of_lower(int i) const
    {
        return classes_.at(static_cast<size_t>(Y_.rows() + Y_.cols() + i - 1));
    }
    DivisorClass class_of_upper(int j) const
    {
        return classes_.at(static_cast<size_t>(Y_.rows() + Y_.cols() + cd_.h() + j - 1));
    }

    /// Sum of all facet prime classes; equals the canonical class.
    DivisorClass interior_class() const
    {
        DivisorClass w(cd_.h(), cd_.k());
        for (const auto& cls : classes_) w += cls;
        return w;
    }

private:
    void solve_classes()
    {
        const size_t nf = facets_.size();
        ZMat rel;
        for (const Cell& cell : Y_.cells()) {
            ZVec row(nf, 0);
            for (size_t f = 0; f < nf; ++f) row[f] = valuation(facets_[f], cell);
            rel.push_back(std::move(row));
        }
        ZMat H = zlin::hnf_rows(std::move(rel));
        const int h = cd_.h(), k = cd_.k();
        const size_t rank = static_cast<size_t>(h + k + 1);
        require(H.size() == nf - rank, errc::internal, "facet relation lattice has unexpected rank");

        // residues of the designated basis (rows a_0..a_h, upper cuts)
        auto residue = [&](size_t facet_idx) {
            ZVec e(nf, 0);
            e[facet_idx] = 1;
            return zlin::reduce_free(H, std::move(e));
        };
        ZMat basis_res;
        for (int i = 0; i <= h; ++i)
            basis_res.push_back(residue(static_cast<size_t>(cd_.a(i) - 1)));
        for (int j = 1; j <= k; ++j)
            basis_res.push_back(residue(static_cast<size_t>(Y_.rows() + Y_.cols() + h + j - 1)));

        // express every facet residue in basis residues: solve B^T x = res
        ZMat BT(nf, ZVec(rank, 0));
        for (size_t b = 0; b < rank; ++b)
            for (size_t c = 0; c < nf; ++c) BT[c][b] = basis_res[b][c];
        classes_.reserve(nf);
        for (size_t f = 0; f < nf; ++f) {
            auto x = zlin::solve(BT, residue(f));
            require(x.has_value(), errc::internal, "facet class not expressible in the corner basis");
            DivisorClass cls(h, k);
            cls.coeffs = *x;
            classes_.push_back(std::move(cls));
        }
    }

    Ladder Y_;
    CornerData cd_;
    std::vector<Facet> facets_;
    std::vector<DivisorClass> classes_;
};

// ---------------------------------------------------------------------------
// Localization maps
// ---------------------------------------------------------------------------

struct ClassGroupMap {
    MoveKind move;
    Ladder domain;
    Ladder codomain;
    std::vector<DivisorClass> images; // one per domain basis element, in codomain basis
    std::vector<DivisorClass> kernel_basis;

    ZMat matrix() const
    {
        const size_t dom = images.size();
        const size_t cod = dom == 0 ? 0 : images[0].coeffs.size();
        ZMat M(cod, ZVec(dom, 0));
        for (size_t j = 0; j < dom; ++j)
            for (size_t i = 0; i < cod; ++i) M[i][j] = images[j].coeffs[i];
        return M;
    }

    DivisorClass apply(const DivisorClass& v) const
    {
        require(v.coeffs.size() == images.size(), errc::dimension_mismatch, "apply: wrong rank");
        DivisorClass out = images.empty() ? DivisorClass() : DivisorClass(images[0].h, images[0].k);
        for (size_t j = 0; j < images.size(); ++j)
            for (size_t i = 0; i < out.coeffs.size(); ++i)
                out.coeffs[i] += v.coeffs[j] * images[j].coeffs[i];
        return out;
    }
};

namespace detail {

/// Transcribed basis-image tables for the four inversion moves. Entries the
/// proofs leave open (InvertCk1Dk on q_i with a_{i-1} beyond the eta window)
/// fall back to the facet model of the codomain.
inline std::vector<DivisorClass> move_images(const Ladder& Y, MoveKind mv, const CornerData& cd,
                                             const EtaKappa& ek, const DeleteResult& del)
{
    const int h = cd.h(), k = cd.k();
    CornerData cod = corners(del.result);
    const int ch = cod.h(), ck = cod.k();
    std::vector<DivisorClass> images(static_cast<size_t>(h + k + 1), DivisorClass(ch, ck));
    auto qi = [&](int i) -> DivisorClass& { return images[static_cast<size_t>(i - 1)]; };
    auto pj = [&](int j) -> DivisorClass& { return images[static_cast<size_t>(h + j)]; };

    switch (mv) {
        case MoveKind::InvertA0B1: {
            // kernel q_1, p_1..p_{kappa2}; everything else shifts down
            require(ch == h - 1 && ck == k - ek.kappa2, errc::internal, "unexpected codomain corners");
            for (int i = 2; i <= h + 1; ++i) qi(i).q(i - 1) = 1;
            for (int j = ek.kappa2 + 1; j <= k; ++j) pj(j).p(j - ek.kappa2) = 1;
            break;
        }
        case MoveKind::InvertAhBh1: {
            require(ch == h - 1 && ck == ek.kappa1 - 1, errc::internal, "unexpected codomain corners");
            for (int i = 1; i <= h; ++i) qi(i).q(i) = 1;
            for (int j = 1; j <= std::min(k, ek.kappa1 - 1); ++j) pj(j).p(j) = 1;
            break;
        }
        case MoveKind::InvertC1D0: {
            require(ch == h - ek.eta2 && ck == k - 1, errc::internal, "unexpected codomain corners");
            for (int i = ek.eta2 + 2; i <= h + 1; ++i) qi(i).q(i - ek.eta2) = 1;
            if (k >= 1) pj(1).q(1) = 1;
            for (int j = 2; j <= k; ++j) pj(j).p(j - 1) = 1;
            break;
        }
        case MoveKind::InvertCk1Dk: {
            require(ch == ek.eta1 - 1 && ck == k - 1, errc::internal, "unexpected codomain corners");
            for (int i = 1; i <= std::min(ek.eta1, h + 1); ++i) qi(i).q(i) = 1;
            for (int i = ek.eta1 + 1; i <= std::min(ek.eta2 + 1, h + 1); ++i) qi(i).q(ek.eta1) = 1;
            for (int j = 1; j <= k - 1; ++j) pj(j).p(j) = 1;
            pj(k) = qprime_class(del.result, ch + 1);
            if (ek.eta2 + 1 < h + 1) {
                // rows a_{eta2+1}..a_h sit past the c_1 window; their images are
                // not written out in any proof, so compute them from the model
                FacetModel model(del.result);
                for (int i = ek.eta2 + 2; i <= h + 1; ++i) {
                    int old_row = cd.a(i - 1);
                    int new_row = old_row <= del.row_end ? del.row_map[static_cast<size_t>(old_row - 1)] : 0;
                    qi(i) = new_row == 0 ? DivisorClass(ch, ck) : model.class_of_row(new_row);
                }
            }
            break;
        }
    }
    return images;
}

} // namespace detail

inline ClassGroupMap localization_map(const Ladder& Y, MoveKind mv)
{
    require_two_connected(Y, "localization_map");
    CornerData cd = corners(Y);
    EtaKappa ek = eta_kappa(cd);
    DeleteResult del = delete_move(Y, mv);

    ClassGroupMap map;
    map.move = mv;
    map.domain = Y;
    map.codomain = del.result;
    map.images = detail::move_images(Y, mv, cd, ek, del);

    ZMat kern = zlin::kernel(map.matrix());
    CornerData cod = corners(del.result);
    for (auto& kv : kern) {
        DivisorClass c(cd.h(), cd.k());
        c.coeffs = std::move(kv);
        map.kernel_basis.push_back(std::move(c));
    }
    return map;
}

/// Images computed purely from the facet models of domain and codomain:
/// facets containing the inverted variable die, deleted rows and columns
/// become free polynomial variables (class 0), and every other facet maps to
/// the codomain facet with the same valuation on surviving cells.
inline std::vector<DivisorClass> localization_images_from_model(const Ladder& Y, MoveKind mv)
{
    FacetModel dom(Y);
    const CornerData& cd = dom.corner_data();
    DeleteResult del = delete_move(Y, mv);
    FacetModel cod(del.result);
    Cell pivot = move_pivot(cd, mv);

    std::vector<Cell> kept_cells = del.result.cells();
    auto codomain_functional = [&](const FacetModel::Facet& f) {
        ZVec vals;
        vals.reserve(kept_cells.size());
        for (const Cell& c : kept_cells) vals.push_back(cod.valuation(f, c));
        return vals;
    };

    auto map_facet = [&](const FacetModel::Facet& f) -> DivisorClass {
        DivisorClass zero(cod.corner_data().h(), cod.corner_data().k());
        if (dom.valuation(f, pivot) != 0) return zero; // contains the inverted variable
        ZVec vals;
        vals.reserve(kept_cells.size());
        bool nonzero = false;
        for (const Cell& c : kept_cells) {
            Cell orig{del.row_begin + c.row - 1, del.col_begin + c.col - 1};
            long long v = dom.valuation(f, orig);
            if (v != 0) nonzero = true;
            vals.push_back(v);
        }
        if (!nonzero) return zero; // facet supported on deleted cells only
        for (size_t fi = 0; fi < cod.facets().size(); ++fi) {
            if (vals == codomain_functional(cod.facets()[fi])) return cod.facet_class(fi);
        }
        fail(errc::internal, "surviving facet does not restrict to a codomain facet");
    };

    std::vector<DivisorClass> images;
    for (int i = 0; i <= cd.h(); ++i)
        images.push_back(map_facet({FacetModel::Facet::Kind::Row, cd.a(i)}));
    for (int j = 1; j <= cd.k(); ++j)
        images.push_back(map_facet({FacetModel::Facet::Kind::Upper, j}));
    return images;
}

// ---------------------------------------------------------------------------
// Preimages
// ---------------------------------------------------------------------------

struct Preimage {
    DivisorClass particular;
    std::vector<DivisorClass> kernel_basis;
};

inline std::optional<Preimage> preimage(const ClassGroupMap& map, const DivisorClass& target)
{
    require(!map.images.empty() && target.coeffs.size() == map.images[0].coeffs.size(),
            errc::dimension_mismatch, "preimage: target not in the codomain lattice");
    auto x = zlin::solve(map.matrix(), target.coeffs);
    if (!x) return std::nullopt;
    Preimage pre;
    CornerData cd = corners(map.domain);
    pre.particular = DivisorClass(cd.h(), cd.k());
    pre.particular.coeffs = *x;
    pre.kernel_basis = map.kernel_basis;
    return pre;
}

} // namespace ladder
