#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/classgroup.hpp"
#include "ladder/connectivity.hpp"
#include "ladder/ladder.hpp"
#include "ladder/monomial.hpp"
#include "ladder/spine.hpp"

namespace ladder {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Candidates
// ---------------------------------------------------------------------------

struct SideCondition {
    std::string description;
    bool satisfied = false;
};

struct Candidate {
    std::string label;  // M1..M6
    std::string origin; // originating N-candidate
    DivisorClass cls;
    std::vector<SideCondition> side_conditions;
    bool live = false;
};

namespace detail {

inline bool all_conditions(const std::vector<SideCondition>& cs)
{
    for (const auto& c : cs)
        if (!c.satisfied) return false;
    return true;
}

inline void finalize(Candidate& cand, const DivisorClass& omega)
{
    cand.live = all_conditions(cand.side_conditions) && !cand.cls.is_zero() && cand.cls != omega;
}

} // namespace detail

/// Candidate nontrivial semidualizing classes of a two-sided 2-connected
/// ladder without coincidental corners, by shape branch:
/// thick -> M1..M4, thin -> M5,M6, otherwise -> M1,M2.
inline std::vector<Candidate> enumerate_candidates(const Ladder& Y)
{
    ShapeReport sh = shape(Y);
    require(sh.two_sided, errc::out_of_scope, "candidates need a two-sided ladder");
    require(!sh.coincidental_corners, errc::out_of_scope, "coincidental corners are out of scope");
    require(two_connected(Y), errc::out_of_scope, "candidates need a 2-connected ladder");

    CornerData cd = corners(Y);
    EtaKappa ek = eta_kappa(cd);
    auto [data, omega] = canonical_class(Y);
    const int h = cd.h(), k = cd.k();
    auto lam = [&](int i) { return data.lambda[static_cast<size_t>(i - 1)]; };
    auto del = [&](int j) { return data.delta[static_cast<size_t>(j - 1)]; };

    std::vector<Candidate> out;

    auto window_conditions = [&]() {
        std::vector<SideCondition> cs;
        cs.push_back({"eta1 <= eta2", ek.eta1 <= ek.eta2});
        cs.push_back({"kappa1 <= kappa2", ek.kappa1 <= ek.kappa2});
        bool lam_outside = true;
        for (int i = 1; i <= h + 1; ++i)
            if ((i < ek.eta1 || i > ek.eta2 + 1) && lam(i) != 0) lam_outside = false;
        cs.push_back({"lambda_i = 0 outside [eta1, eta2+1]", lam_outside});
        bool del_outside = true;
        for (int j = 1; j <= k; ++j)
            if ((j < ek.kappa1 || j > ek.kappa2) && del(j) != 0) del_outside = false;
        cs.push_back({"delta_j = 0 outside [kappa1, kappa2]", del_outside});
        long long wsum = 0;
        for (int i = std::max(1, ek.eta1); i <= std::min(h + 1, ek.eta2 + 1); ++i) wsum += lam(i);
        cs.push_back({"sum of lambda over [eta1, eta2+1] = 0", wsum == 0});
        return cs;
    };

    auto emit_m1m2 = [&]() {
        Candidate m1{"M1", "N12", DivisorClass(h, k), window_conditions(), false};
        for (int i = std::max(1, ek.eta1); i <= std::min(h + 1, ek.eta2 + 1); ++i) m1.cls.q(i) = lam(i);
        detail::finalize(m1, omega);
        Candidate m2{"M2", "N7", omega - m1.cls, m1.side_conditions, false};
        detail::finalize(m2, omega);
        out.push_back(std::move(m1));
        out.push_back(std::move(m2));
    };

    if (sh.thick) {
        emit_m1m2();
        std::vector<SideCondition> cs;
        cs.push_back({"eta2 = h", ek.eta2 == h});
        cs.push_back({"kappa1 = 1", ek.kappa1 == 1});
        cs.push_back({"kappa2 = k", ek.kappa2 == k});
        cs.push_back({"eta1 = 1", ek.eta1 == 1});
        bool equal = true;
        for (int j = 1; j <= k; ++j)
            if (del(j) != lam(1)) equal = false;
        cs.push_back({"lambda_1 = delta_1 = ... = delta_k", equal});
        bool mid = true;
        for (int i = 2; i <= h; ++i)
            if (lam(i) != 0) mid = false;
        cs.push_back({"lambda_i = 0 for 1 < i < h+1", mid});

        Candidate m3{"M3", "N9", DivisorClass(h, k), cs, false};
        m3.cls.q(1) = lam(1);
        for (int j = 1; j <= k; ++j) m3.cls.p(j) = lam(1);
        detail::finalize(m3, omega);
        Candidate m4{"M4", "N10", omega - m3.cls, cs, false};
        detail::finalize(m4, omega);
        out.push_back(std::move(m3));
        out.push_back(std::move(m4));
    } else if (sh.thin) {
        std::vector<SideCondition> cs;
        bool anti = true;
        for (int i = 2; i <= h; ++i)
            if (cd.a(i) + cd.b(i) != cd.a(1) + cd.b(1)) anti = false;
        for (int j = 1; j <= k; ++j)
            if (cd.c(j) + cd.d(j) != cd.a(1) + cd.b(1)) anti = false;
        cs.push_back({"all inside corners on one antidiagonal", anti});

        Candidate m5{"M5", "N8", DivisorClass(h, k), cs, false};
        m5.cls.q(1) = lam(1);
        detail::finalize(m5, omega);
        Candidate m6{"M6", "N11", omega - m5.cls, cs, false};
        detail::finalize(m6, omega);
        out.push_back(std::move(m5));
        out.push_back(std::move(m6));
    } else {
        emit_m1m2();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification result
// ---------------------------------------------------------------------------

struct TraceEntry {
    std::string anchor;
    json data;
};

struct ClassificationResult {
    enum class Status { ExactSet, BoundOnly, Unknown };
    Status status = Status::Unknown;
    std::vector<DivisorClass> classes; // [R] first, then [omega] when nonzero
    std::optional<int> bound;
    std::vector<TraceEntry> trace;
    std::string reason;

    size_t size() const { return classes.size(); }
};

inline const char* status_name(ClassificationResult::Status s)
{
    switch (s) {
        case ClassificationResult::Status::ExactSet: return "ExactSet";
        case ClassificationResult::Status::BoundOnly: return "BoundOnly";
        case ClassificationResult::Status::Unknown: return "Unknown";
    }
    return "?";
}

namespace detail {

inline json cls_json(const DivisorClass& c)
{
    json q = json::array(), p = json::array();
    for (int i = 1; i <= c.h + 1; ++i) q.push_back(c.q(i));
    for (int j = 1; j <= c.k; ++j) p.push_back(c.p(j));
    return json{{"q", q}, {"p", p}};
}

inline ClassificationResult exact_trivial_pair(const DivisorClass& omega, std::vector<TraceEntry> trace)
{
    ClassificationResult res;
    res.status = ClassificationResult::Status::ExactSet;
    res.classes.push_back(DivisorClass(omega.h, omega.k));
    if (!omega.is_zero()) res.classes.push_back(omega);
    res.trace = std::move(trace);
    return res;
}

inline std::string mon_str(const Monomial& m) { return m.str(); }

// Witness battery for a stripped one-sided ladder with h = 0, run when the
// inside corners share an antidiagonal and zeta * delta != 0.
inline void one_sided_witnesses(const Ladder& Y, std::vector<TraceEntry>& trace)
{
    CornerData cd = corners(Y);
    const int k = cd.k();
    const int m = Y.rows(), n = Y.cols();
    if (k == 0) return;
    bool anti = true;
    for (int j = 2; j <= k; ++j)
        if (cd.c(j) + cd.d(j) != cd.c(1) + cd.d(1)) anti = false;
    if (!anti) {
        trace.push_back({"candidates-dead", json{{"note", "inside corners not on one antidiagonal"}}});
        return;
    }
    long long delta0 = (m + 1) - (1 + n);
    long long delta1 = (m + 1) - (cd.c(1) + cd.d(1));
    long long zeta = delta0 - delta1;
    json base{{"zeta", zeta}, {"delta", delta1}};
    if (zeta == 0 || delta1 == 0) {
        trace.push_back({"candidates-trivial", base});
        return;
    }
    if (std::max(std::abs(zeta), std::abs(delta1)) > 4 || n > 12 || m > 12) {
        base["note"] = "witness skipped: exponent or grid too large";
        trace.push_back({"witness-skipped", base});
        return;
    }

    if (zeta > 0 && delta1 > 0) {
        MonomialIdeal M1 = ideal_power(Y, prime_ideal(Y, {PrimeKind::Q, 1}), static_cast<int>(zeta));
        std::vector<std::pair<DivisorialIdealSpec, int>> combo{{{PrimeKind::Q, 1}, static_cast<int>(delta1)}};
        for (int j = 1; j <= k; ++j) combo.push_back({{PrimeKind::P, j}, static_cast<int>(delta1)});
        MonomialIdeal M2 = class_representative(Y, combo);
        auto w = multiplication_collision(Y, M1, M2);
        base["found"] = w.has_value();
        if (w) {
            base["witness"] = json::array({mon_str(w->m1), mon_str(w->m2), mon_str(w->m1p), mon_str(w->m2p)});
        }
        // the displayed pair: x^z (x) x^{d-1} y  =  x^{z-1} y (x) x^d at the corner variable
        Monomial x = mon_var(Y, 1, 1), y = mon_var(Y, 1, 2);
        Monomial lhs = mon_mul(Y, mon_pow(Y, x, static_cast<int>(zeta)),
                               mon_mul(Y, mon_pow(Y, x, static_cast<int>(delta1) - 1), y));
        Monomial rhs = mon_mul(Y, mon_mul(Y, mon_pow(Y, x, static_cast<int>(zeta) - 1), y),
                               mon_pow(Y, x, static_cast<int>(delta1)));
        base["display_identity"] = mon_equal(lhs, rhs);
        trace.push_back({"case1-collision", base});
    } else if (zeta < 0 && delta1 < 0) {
        base["note"] = "reduces to the positive case by symmetry";
        trace.push_back({"case2-symmetric", base});
    } else if (zeta > 0 && delta1 < 0) {
        MonomialIdeal A = ideal_power(Y, prime_ideal(Y, {PrimeKind::Q, 1}), static_cast<int>(zeta));
        MonomialIdeal B = ideal_power(Y, prime_ideal(Y, {PrimeKind::P, k + 1}), static_cast<int>(-delta1));
        LcmMapReport rep = lcm_map_analysis(Y, A, B);
        base["image_minimal"] = rep.image_minimal;
        base["injective"] = rep.injective;
        if (rep.offending_lcm) base["offending_lcm"] = mon_str(*rep.offending_lcm);
        // displayed offender: lcm(x^{z-1} u, x^{|d|-1} v) = lcm(x^z, x^{|d|}) * w
        Monomial x = mon_var(Y, 1, 1), u = mon_var(Y, 1, 2), v = mon_var(Y, 2, 1), w2 = mon_var(Y, 2, 2);
        Monomial lhs = mon_lcm(Y, mon_mul(Y, mon_pow(Y, x, static_cast<int>(zeta) - 1), u),
                               mon_mul(Y, mon_pow(Y, x, static_cast<int>(-delta1) - 1), v));
        Monomial rhs = mon_mul(Y, mon_lcm(Y, mon_pow(Y, x, static_cast<int>(zeta)),
                                          mon_pow(Y, x, static_cast<int>(-delta1))),
                               w2);
        base["display_identity"] = mon_equal(lhs, rhs);
        trace.push_back({"case3-lcm", base});
    } else { // zeta < 0, delta1 > 0
        const int dk = cd.d(k);
        if (dk < 2) {
            base["note"] = "differential transcription needs d_k >= 2";
            trace.push_back({"witness-skipped", base});
            return;
        }
        std::vector<Cell> window;
        for (int q = 1; q <= dk; ++q) window.push_back({1, q});
        MonomialIdeal M2 = ideal_power(Y, ideal_from_cells(Y, window), static_cast<int>(delta1));
        std::vector<Cell> colwin;
        for (int p = 1; p <= cd.c(1); ++p) colwin.push_back({p, 1});
        MonomialIdeal M1amb = ideal_power(Y, ideal_from_cells(Y, colwin), static_cast<int>(-zeta));

        SignedMonomialMatrix D = SignedMonomialMatrix::zeros(M2.gens.size(), static_cast<size_t>(m));
        for (int p = 1; p <= m; ++p) {
            D.at(0, static_cast<size_t>(p - 1)) = PolyElement(mon_var(Y, p, 2), 1);
            D.at(1, static_cast<size_t>(p - 1)) = PolyElement(mon_var(Y, p, 1), -1);
        }
        std::vector<PolyElement> v(static_cast<size_t>(m));
        v[0] = PolyElement(mon_mul(Y, mon_pow(Y, mon_var(Y, 1, 1), static_cast<int>(-zeta) - 1), mon_var(Y, 2, 1)), 1);
        v[1] = PolyElement(mon_pow(Y, mon_var(Y, 1, 1), static_cast<int>(-zeta)), -1);
        KernelWitnessReport rep = check_kernel_witness(Y, D, v, M1amb);
        base["in_kernel"] = rep.in_kernel;
        base["coordinate_minimal"] = rep.coordinate_minimal;
        trace.push_back({"case4-kernel", base});
    }
}

/// Stage-2h~ kernel witness against the transcribed spine differential, for
/// thin ladders whose live candidates have lambda_1, lambda_{h+1} < 0.
inline void thin_witness(const Ladder& Y, std::vector<TraceEntry>& trace)
{
    CornerData cd = corners(Y);
    const int h = cd.h();
    long long lam1 = cd.a(1) + cd.b(1) - cd.a(0) - cd.b(0);
    long long lamh1 = cd.a(h + 1) + cd.b(h + 1) - cd.a(h) - cd.b(h);
    json base{{"lambda_1", lam1}, {"lambda_h+1", lamh1}};
    if (!(lam1 < 0 && lamh1 < 0)) {
        base["note"] = "kernel transcription implemented for the doubly negative case";
        trace.push_back({"thin-witness-skipped", base});
        return;
    }
    if (-lamh1 > 4) {
        base["note"] = "witness skipped: exponent too large";
        trace.push_back({"witness-skipped", base});
        return;
    }
    Ladder sp = spine(Y);
    CornerData scd = corners(sp);
    const int sh = scd.h();
    base["spine_h"] = sh;
    if (sh < 1 || scd.a(sh) != cd.a(h) || scd.d(scd.k()) < 2) {
        base["note"] = "spine corner data does not match the displayed block";
        trace.push_back({"thin-witness-skipped", base});
        return;
    }
    const int ar = scd.a(sh);       // displayed row of the block
    const int dc = scd.d(scd.k());  // displayed column of the block
    int ncols = 0;
    while (Y.contains(ar + ncols, dc) && Y.contains(ar + ncols, dc - 1)) ++ncols;
    if (ncols < 2) {
        base["note"] = "block does not fit inside the ladder";
        trace.push_back({"thin-witness-skipped", base});
        return;
    }
    SignedMonomialMatrix D = SignedMonomialMatrix::zeros(3, static_cast<size_t>(ncols));
    for (int t = 0; t < ncols; ++t) {
        D.at(0, static_cast<size_t>(t)) = PolyElement(mon_var(Y, ar + t, dc), 1);
        D.at(1, static_cast<size_t>(t)) = PolyElement(mon_var(Y, ar + t, dc - 1), 1);
    }
    std::vector<Cell> colwin;
    for (int p = cd.a(h); p <= cd.a(h + 1); ++p) colwin.push_back({p, 1});
    MonomialIdeal M6 = ideal_power(Y, ideal_from_cells(Y, colwin), static_cast<int>(-lamh1));

    std::vector<PolyElement> v(static_cast<size_t>(ncols));
    Monomial xa = mon_var(Y, cd.a(h) + 1, 1);
    v[0] = PolyElement(mon_pow(Y, xa, static_cast<int>(-lamh1)), 1);
    v[1] = PolyElement(mon_mul(Y, mon_pow(Y, xa, static_cast<int>(-lamh1) - 1), mon_var(Y, cd.a(h), 1)), -1);
    KernelWitnessReport rep = check_kernel_witness(Y, D, v, M6);
    base["in_kernel"] = rep.in_kernel;
    base["coordinate_minimal"] = rep.coordinate_minimal;
    trace.push_back({"thin-kernel", base});
}

/// Thick-branch display identity for live M3/M4 with lambda_1 > 0.
inline void thick_witness(const Ladder& Y, std::vector<TraceEntry>& trace)
{
    CornerData cd = corners(Y);
    const int h = cd.h(), k = cd.k();
    auto lam = canonical_data(cd);
    long long lam1 = lam.lambda.front(), lamh1 = lam.lambda.back();
    json base{{"lambda_1", lam1}, {"lambda_h+1", lamh1}};
    bool live_shape = true;
    for (int j = 1; j <= k; ++j)
        if (lam.delta[static_cast<size_t>(j - 1)] != lam1) live_shape = false;
    for (int i = 2; i <= h; ++i)
        if (lam.lambda[static_cast<size_t>(i - 1)] != 0) live_shape = false;
    if (!live_shape || lam1 <= 0 || lamh1 <= 0 || lam1 > 4 || lamh1 > 4) {
        base["note"] = "display identity checked for live positive M3/M4 only";
        trace.push_back({"thick-witness-skipped", base});
        return;
    }
    const int b1 = cd.b(1), ah = cd.a(h), b0 = cd.b(0);
    Monomial lhs = mon_mul(
        Y,
        mon_mul(Y, mon_pow(Y, mon_var(Y, 1, b1), static_cast<int>(lam1) - 1),
                mon_mul(Y, mon_var(Y, 1, b0), mon_var(Y, ah, 1))),
        mon_pow(Y, mon_var(Y, ah, b1), static_cast<int>(lamh1)));
    Monomial rhs = mon_mul(
        Y, mon_pow(Y, mon_var(Y, 1, b1), static_cast<int>(lam1)),
        mon_mul(Y, mon_pow(Y, mon_var(Y, ah, b1), static_cast<int>(lamh1) - 1),
                mon_mul(Y, mon_var(Y, ah, b0), mon_var(Y, ah, 1))));
    base["display_identity"] = mon_equal(lhs, rhs);
    trace.push_back({"thick-collision", base});
}

} // namespace detail

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

inline ClassificationResult classify(const Ladder& Y, int t, bool verify = false)
{
    require(t >= 1, errc::index_out_of_range, "t must be >= 1");
    std::vector<TraceEntry> trace;

    if (t == 1) {
        trace.push_back({"t1-field", json{{"note", "R_1(Y) is the ground field"}}});
        ClassificationResult res;
        res.status = ClassificationResult::Status::ExactSet;
        res.classes.push_back(DivisorClass(-1, 0)); // trivial class group
        res.trace = std::move(trace);
        return res;
    }

    if (!has_t_minor(Y, t)) {
        trace.push_back({"no-t-minors-polynomial", json{{"t", t}}});
        ClassificationResult res;
        res.status = ClassificationResult::Status::ExactSet;
        res.classes.push_back(DivisorClass(-1, 0));
        res.trace = std::move(trace);
        return res;
    }

    if (!path_connected(Y)) {
        auto comps = path_components(Y);
        std::vector<size_t> bearing;
        for (size_t i = 0; i < comps.size(); ++i)
            if (has_t_minor(comps[i].cropped, t)) bearing.push_back(i);
        if (bearing.size() == 1) {
            trace.push_back({"component-reduction",
                             json{{"components", comps.size()}, {"minor_bearing", 1}}});
            ClassificationResult res = classify(comps[bearing[0]].cropped, t, verify);
            res.trace.insert(res.trace.begin(), trace.begin(), trace.end());
            return res;
        }
        ClassificationResult res;
        res.status = ClassificationResult::Status::Unknown;
        res.reason = "path-disconnected-multiple-minor-components";
        trace.push_back({"path-disconnected", json{{"components", comps.size()},
                                                   {"minor_bearing", bearing.size()}}});
        res.trace = std::move(trace);
        return res;
    }

    ShapeReport sh = shape(Y);

    if (sh.is_rectangle) {
        // base case: R_t of a full matrix has trivial semidualizing modules,
        // with a dualizing one exactly off the square case
        const int m = Y.rows(), n = Y.cols();
        trace.push_back({"rectangle-criterion",
                         json{{"m", m}, {"n", n}, {"t", t}, {"gorenstein", m == n}, {"external", true}}});
        ClassificationResult res;
        res.status = ClassificationResult::Status::ExactSet;
        res.classes.push_back(DivisorClass(0, 0));
        if (m != n) {
            DivisorClass w(0, 0);
            w.q(1) = m - n;
            res.classes.push_back(w);
        }
        res.trace = std::move(trace);
        return res;
    }

    if (sh.one_sided) {
        CornerData cd0 = corners(Y);
        bool reflected = cd0.k() == 0;
        Ladder Yn = reflected ? reflect(Y) : Y;
        if (reflected)
            trace.push_back({"reflected-normalization", json{{"note", "h and k swapped"}}});
        StripResult sr = strip_unused(Yn, t);
        trace.push_back({"strip", json{{"removed", sr.removed.size()},
                                       {"kept_m", sr.kept.rows()},
                                       {"kept_n", sr.kept.cols()}}});
        if (shape(sr.kept).is_rectangle) {
            ClassificationResult res = classify(sr.kept, t, verify);
            res.trace.insert(res.trace.begin(), trace.begin(), trace.end());
            return res;
        }
        if (t == 2) {
            auto [data, omega] = canonical_class(sr.kept);
            trace.push_back({"one-sided-theorem",
                             json{{"lambda", data.lambda}, {"delta", data.delta},
                                  {"gorenstein", omega.is_zero()}}});
            if (verify) detail::one_sided_witnesses(sr.kept, trace);
            return detail::exact_trivial_pair(omega, std::move(trace));
        }
        trace.push_back({"cl-transfer-bound",
                         json{{"t", t}, {"note", "bound transferred through the class-group isomorphism"}}});
        ClassificationResult res;
        res.status = ClassificationResult::Status::BoundOnly;
        res.bound = 2;
        res.trace = std::move(trace);
        return res;
    }

    // two-sided from here on
    if (t >= 3) {
        ClassificationResult res;
        res.status = ClassificationResult::Status::Unknown;
        res.reason = "two-sided-t-ge-3-not-covered";
        res.trace = std::move(trace);
        return res;
    }
    if (sh.coincidental_corners) {
        ClassificationResult res;
        res.status = ClassificationResult::Status::Unknown;
        res.reason = "coincidental-corners-part-ii";
        trace.push_back({"coincidental-corners", json{{"note", "handled in a separate study"}}});
        res.trace = std::move(trace);
        return res;
    }
    if (!two_connected(Y)) {
        ClassificationResult res;
        res.status = ClassificationResult::Status::Unknown;
        res.reason = "not-2-connected";
        res.trace = std::move(trace);
        return res;
    }

    std::vector<Candidate> cands = enumerate_candidates(Y);
    auto [data, omega] = canonical_class(Y);
    const char* anchor = sh.thick   ? "thick-ladder-theorem"
                         : sh.thin ? "thin-ladder-theorem"
                                    : "two-sided-ladder-theorem";
    json cj = json::array();
    int live = 0;
    for (const auto& c : cands) {
        live += c.live ? 1 : 0;
        cj.push_back(json{{"label", c.label}, {"live", c.live}});
    }
    trace.push_back({anchor, json{{"candidates", cj}, {"live", live},
                                  {"gorenstein", omega.is_zero()}}});
    if (verify) {
        if (sh.thick) detail::thick_witness(Y, trace);
        if (sh.thin) detail::thin_witness(Y, trace);
    }
    return detail::exact_trivial_pair(omega, std::move(trace));
}

} // namespace ladder
