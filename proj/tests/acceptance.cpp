// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ladder/classifier.hpp"
#include "ladder/json_io.hpp"
#include "ladder/spine.hpp"
#include "support.hpp"

using namespace ladder;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body)
    {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

bool expect(bool cond, const std::string& msg, std::string& detail)
{
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

std::vector<Cell> cells_of(std::initializer_list<std::pair<int, int>> xs)
{
    std::vector<Cell> out;
    for (auto [r, c] : xs) out.push_back({r, c});
    return out;
}

bool bfs_divides(const Ladder& Y, const Monomial& g, const Monomial& m)
{
    auto closure = oracle::exchange_closure(Y, m.cells());
    for (const auto& rep : closure) {
        std::vector<Cell> pool = rep;
        bool sub = true;
        for (const Cell& c : g.cells()) {
            auto it = std::find(pool.begin(), pool.end(), c);
            if (it == pool.end()) {
                sub = false;
                break;
            }
            pool.erase(it);
        }
        if (sub) return true;
    }
    return false;
}

} // namespace

int main()
{
    Harness h;

    // ----------------------------------------------------------------- 1
    h.criterion(1, "golden ladder: rank, generators, lambda/delta, omega, classification",
                [&](std::string& d) {
        Ladder L = fixtures::L();
        bool ok = true;
        ok &= expect(class_group(L).rank == 4, "rank", d);
        ok &= expect(prime_generators(L, {PrimeKind::P, 1}) ==
                         cells_of({{1, 2}, {1, 3}, {2, 2}, {2, 3}}),
                     "p1 generators", d);
        ok &= expect(prime_generators(L, {PrimeKind::P, 2}) ==
                         cells_of({{1, 2}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}),
                     "p2 generators", d);
        ok &= expect(prime_generators(L, {PrimeKind::Q, 1}) ==
                         cells_of({{1, 2}, {1, 3}, {1, 4}, {1, 5}}),
                     "q1 generators", d);
        ok &= expect(prime_generators(L, {PrimeKind::Q, 2}) == cells_of({{3, 1}, {3, 2}, {3, 3}}),
                     "q2 generators", d);
        ok &= expect(prime_generators(L, {PrimeKind::Qprime, 1}) ==
                         cells_of({{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}}),
                     "q1' generators", d);
        ok &= expect(prime_generators(L, {PrimeKind::Qprime, 2}) ==
                         cells_of({{3, 1}, {4, 1}, {5, 1}}),
                     "q2' generators", d);
        auto [data, omega] = canonical_class(L);
        ok &= expect(data.lambda == ZVec{-1, 1} && data.delta == ZVec{0, 0}, "lambda/delta", d);
        ok &= expect(omega.coeffs == ZVec{-1, 1, 0, 0}, "omega = q2 - q1", d);
        ClassificationResult res = classify(L, 2);
        ok &= expect(res.status == ClassificationResult::Status::ExactSet && res.size() == 2,
                     "classify(L,2)", d);
        ok &= expect(res.classes[0].is_zero() && res.classes[1] == omega, "classes = {0, omega}", d);
        return ok;
    });

    // ----------------------------------------------------------------- 2
    h.criterion(2, "eta/kappa on (L) and the eight-corner fixture", [&](std::string& d) {
        EtaKappa el = eta_kappa(fixtures::L());
        bool ok = expect(el.eta1 == 1 && el.eta2 == 0 && el.kappa1 == 2 && el.kappa2 == 2,
                         "(L) -> (1,0,2,2)", d);
        Ladder big = fixtures::big8();
        CornerData cd = corners(big);
        ok &= expect(cd.h() == 7 && cd.k() == 8, "h=7, k=8", d);
        EtaKappa eb = eta_kappa(big);
        ok &= expect(eb.eta1 == 3 && eb.eta2 == 5 && eb.kappa1 == 4 && eb.kappa2 == 6,
                     "big -> (3,5,4,6)", d);
        return ok;
    });

    // ----------------------------------------------------------------- 3
    h.criterion(3, "one-sided results: O at t = 2,3,4 and the 3x5 example at t = 3",
                [&](std::string& d) {
        bool ok = true;
        ClassificationResult o2 = classify(fixtures::O(), 2);
        ok &= expect(o2.status == ClassificationResult::Status::ExactSet && o2.size() == 2,
                     "classify(O,2) size 2", d);
        ClassificationResult o4 = classify(fixtures::O(), 4);
        ok &= expect(o4.status == ClassificationResult::Status::ExactSet && o4.size() == 1,
                     "classify(O,4) size 1", d);
        ClassificationResult e3 = classify(fixtures::Yex(), 3);
        ok &= expect(e3.status == ClassificationResult::Status::ExactSet && e3.size() == 2,
                     "classify(Yex,3) size 2", d);
        // documented limitation: t = 3 on O transfers only the bound
        ClassificationResult o3 = classify(fixtures::O(), 3);
        ok &= expect(o3.status == ClassificationResult::Status::BoundOnly && o3.bound == 2,
                     "classify(O,3) BoundOnly 2", d);
        return ok;
    });

    // ----------------------------------------------------------------- 4
    h.criterion(4, "monomial engine matches the exhaustive oracle on all ladders up to 4x4",
                [&](std::string& d) {
        std::mt19937_64 rng(424242);
        long long checked = 0, ladders = 0, skipped = 0;
        bool ok = true;
        for (int m = 1; m <= 4 && ok; ++m)
            for (int n = 1; n <= 4 && ok; ++n)
                for (const Ladder& Y : gen::all_ladders(m, n)) {
                    if (!ok) break;
                    try {
                        check_supported(Y);
                    } catch (const ladder_error&) {
                        ++skipped; // the power/intersection lemmas need 2-connectivity
                        continue;
                    }
                    ++ladders;
                    CornerData cd = corners(Y);
                    std::vector<DivisorialIdealSpec> specs;
                    for (int i = 1; i <= cd.h() + 1; ++i) {
                        specs.push_back({PrimeKind::Q, i});
                        specs.push_back({PrimeKind::Qprime, i});
                    }
                    for (int j = 1; j <= cd.k(); ++j) specs.push_back({PrimeKind::P, j});

                    auto monos = oracle::standard_monomials(Y, 6);
                    std::vector<std::vector<oracle::CellMultiset>> gen_cells;
                    for (const auto& s : specs) {
                        std::vector<oracle::CellMultiset> g;
                        for (const Cell& c : prime_generators(Y, s)) g.push_back({c});
                        gen_cells.push_back(std::move(g));
                    }
                    // powers, exhaustively
                    for (size_t s = 0; s < specs.size() && ok; ++s) {
                        MonomialIdeal J = prime_ideal(Y, specs[s]);
                        for (int e = 1; e <= 3 && ok; ++e) {
                            MonomialIdeal Je = ideal_power(Y, J, e);
                            for (const Monomial& mm : monos) {
                                ++checked;
                                if (membership(Y, mm, Je) !=
                                    oracle::member_power(Y, gen_cells[s], e, mm.cells())) {
                                    ok = expect(false, "power mismatch " + mm.str(), d);
                                    break;
                                }
                            }
                        }
                    }
                    // pairwise intersections at e = (1,1), exhaustively
                    for (size_t a = 0; a < specs.size() && ok; ++a)
                        for (size_t b = a + 1; b < specs.size() && ok; ++b) {
                            MonomialIdeal I = ideal_intersect(
                                Y, {prime_ideal(Y, specs[a]), prime_ideal(Y, specs[b])});
                            for (const Monomial& mm : monos) {
                                ++checked;
                                bool want = oracle::member_power(Y, gen_cells[a], 1, mm.cells()) &&
                                            oracle::member_power(Y, gen_cells[b], 1, mm.cells());
                                if (membership(Y, mm, I) != want) {
                                    ok = expect(false, "intersection mismatch " + mm.str(), d);
                                    break;
                                }
                            }
                        }
                    // seeded random exponent pairs up to 3
                    for (int trial = 0; trial < 2 && ok && specs.size() >= 2; ++trial) {
                        size_t a = rng() % specs.size(), b = rng() % specs.size();
                        if (a == b) continue;
                        int e1 = 1 + static_cast<int>(rng() % 3), e2 = 1 + static_cast<int>(rng() % 2);
                        MonomialIdeal I = ideal_intersect(
                            Y, {ideal_power(Y, prime_ideal(Y, specs[a]), e1),
                                ideal_power(Y, prime_ideal(Y, specs[b]), e2)});
                        for (const Monomial& mm : monos) {
                            ++checked;
                            bool want = oracle::member_power(Y, gen_cells[a], e1, mm.cells()) &&
                                        oracle::member_power(Y, gen_cells[b], e2, mm.cells());
                            if (membership(Y, mm, I) != want) {
                                ok = expect(false, "intersection mismatch " + mm.str(), d);
                                break;
                            }
                        }
                    }
                    // membership agrees with the straightening BFS on a sample
                    for (int trial = 0; trial < 4 && ok; ++trial) {
                        const Monomial& mm = monos[rng() % monos.size()];
                        if (mm.degree() > 4) continue;
                        MonomialIdeal J = prime_ideal(Y, specs[rng() % specs.size()]);
                        bool via_bfs = false;
                        for (const Monomial& g : J.gens) via_bfs = via_bfs || bfs_divides(Y, g, mm);
                        if (membership(Y, mm, J) != via_bfs)
                            ok = expect(false, "BFS membership mismatch " + mm.str(), d);
                    }
                }
        if (ok)
            d = std::to_string(checked) + " memberships over " + std::to_string(ladders) +
                " ladders (" + std::to_string(skipped) + " not 2-connected skipped)";
        return ok;
    });

    // ----------------------------------------------------------------- 5
    h.criterion(5, "witness reproduction: collisions, lcm minimality, kernel elements",
                [&](std::string& d) {
        bool ok = true;
        int case1 = 0, case3 = 0, case4 = 0;
        for (int m = 3; m <= 8 && ok; ++m)
            for (int n = 2; n <= 6 && ok; ++n)
                for (int s = 4; s <= m + n - 2 && ok; ++s) {
                    auto maybe = fixtures::antidiag_one_sided(m, n, s);
                    if (!maybe) continue;
                    Ladder Y = *maybe;
                    if (!two_connected(Y)) continue;
                    CornerData cd = corners(Y);
                    const int k = cd.k();
                    long long zeta = s - n - 1, delta = m + 1 - s;
                    if (zeta >= 1 && delta >= 1) {
                        // (a) the multiplication collision appears
                        ++case1;
                        MonomialIdeal M1 =
                            ideal_power(Y, prime_ideal(Y, {PrimeKind::Q, 1}), static_cast<int>(zeta));
                        std::vector<std::pair<DivisorialIdealSpec, int>> combo{
                            {{PrimeKind::Q, 1}, static_cast<int>(delta)}};
                        for (int j = 1; j <= k; ++j)
                            combo.push_back({{PrimeKind::P, j}, static_cast<int>(delta)});
                        MonomialIdeal M2 = class_representative(Y, combo);
                        auto w = multiplication_collision(Y, M1, M2);
                        ok &= expect(w.has_value(), "collision missing", d);
                        if (w)
                            ok &= expect(mon_equal(mon_mul(Y, w->m1, w->m2), mon_mul(Y, w->m1p, w->m2p)),
                                         "collision products differ", d);
                    } else if (zeta >= 1 && delta <= -1) {
                        // (b) lcm image not minimal, displayed witness confirmed
                        ++case3;
                        MonomialIdeal A =
                            ideal_power(Y, prime_ideal(Y, {PrimeKind::Q, 1}), static_cast<int>(zeta));
                        MonomialIdeal B = ideal_power(Y, prime_ideal(Y, {PrimeKind::P, k + 1}),
                                                      static_cast<int>(-delta));
                        LcmMapReport rep = lcm_map_analysis(Y, A, B);
                        ok &= expect(!rep.image_minimal, "image unexpectedly minimal", d);
                        Monomial x = mon_var(Y, 1, 1), u = mon_var(Y, 1, 2), v = mon_var(Y, 2, 1);
                        Monomial lhs =
                            mon_lcm(Y, mon_mul(Y, mon_pow(Y, x, static_cast<int>(zeta) - 1), u),
                                    mon_mul(Y, mon_pow(Y, x, static_cast<int>(-delta) - 1), v));
                        Monomial rhs = mon_mul(Y,
                                               mon_lcm(Y, mon_pow(Y, x, static_cast<int>(zeta)),
                                                       mon_pow(Y, x, static_cast<int>(-delta))),
                                               mon_var(Y, 2, 2));
                        ok &= expect(mon_equal(lhs, rhs), "displayed lcm identity", d);
                        MonomialIdeal cap = ideal_intersect(Y, {A, B});
                        bool offending = false;
                        for (const Monomial& g : cap.gens) {
                            auto q = mon_quotient(Y, lhs, g);
                            if (q && q->degree() >= 1) offending = true;
                        }
                        ok &= expect(offending, "witness lcm should be non-minimal", d);
                    } else if (zeta <= -1 && delta >= 1 && cd.d(k) >= 2) {
                        // (c) kernel element of the transcribed first differential
                        ++case4;
                        std::vector<Cell> window;
                        for (int q = 1; q <= cd.d(k); ++q) window.push_back({1, q});
                        MonomialIdeal M2 =
                            ideal_power(Y, ideal_from_cells(Y, window), static_cast<int>(delta));
                        std::vector<Cell> colwin;
                        for (int p = 1; p <= cd.c(1); ++p) colwin.push_back({p, 1});
                        MonomialIdeal M1 =
                            ideal_power(Y, ideal_from_cells(Y, colwin), static_cast<int>(-zeta));
                        SignedMonomialMatrix D =
                            SignedMonomialMatrix::zeros(M2.gens.size(), static_cast<size_t>(m));
                        for (int p = 1; p <= m; ++p) {
                            D.at(0, static_cast<size_t>(p - 1)) = PolyElement(mon_var(Y, p, 2), 1);
                            D.at(1, static_cast<size_t>(p - 1)) = PolyElement(mon_var(Y, p, 1), -1);
                        }
                        std::vector<PolyElement> v(static_cast<size_t>(m));
                        v[0] = PolyElement(
                            mon_mul(Y, mon_pow(Y, mon_var(Y, 1, 1), static_cast<int>(-zeta) - 1),
                                    mon_var(Y, 2, 1)),
                            1);
                        v[1] = PolyElement(mon_pow(Y, mon_var(Y, 1, 1), static_cast<int>(-zeta)), -1);
                        KernelWitnessReport rep = check_kernel_witness(Y, D, v, M1);
                        ok &= expect(rep.in_kernel, "case-4 element not in the kernel", d);
                        ok &= expect(rep.coordinate_minimal, "case-4 coordinate not minimal", d);
                    }
                }
        ok &= expect(case1 > 0 && case3 > 0 && case4 > 0, "fixture sweep incomplete", d);

        // thin-theorem stage witness on the spine differential
        ClassificationResult rt = classify(fixtures::thin6x8(), 2, true);
        bool thin_ok = false;
        for (const auto& e : rt.trace)
            if (e.anchor == "thin-kernel")
                thin_ok = e.data.at("in_kernel") == true && e.data.at("coordinate_minimal") == true;
        ok &= expect(thin_ok, "thin stage-2h~ witness", d);
        if (ok)
            d = std::to_string(case1) + "/" + std::to_string(case3) + "/" + std::to_string(case4) +
                " case-1/3/4 fixtures";
        return ok;
    });

    // ----------------------------------------------------------------- 6
    h.criterion(6, "candidate algebra and classification on 1000 random two-sided ladders",
                [&](std::string& d) {
        std::mt19937_64 rng(123456789);
        bool ok = true;
        int gorenstein = 0;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            Ladder Y = gen::random_ladder_where(rng, 12, 12, [](const Ladder& Y) {
                ShapeReport s = shape(Y);
                return s.two_sided && !s.coincidental_corners && two_connected(Y);
            });
            auto [data, omega] = canonical_class(Y);
            auto cands = enumerate_candidates(Y);
            ok &= expect(cands.size() == 2 || cands.size() == 4, "branch size", d);
            for (size_t i = 0; i + 1 < cands.size(); i += 2)
                ok &= expect(cands[i].cls + cands[i + 1].cls == omega,
                             "pairing " + cands[i].label + "+" + cands[i + 1].label, d);
            ClassificationResult res = classify(Y, 2);
            ok &= expect(res.status == ClassificationResult::Status::ExactSet, "status", d);
            ok &= expect(res.size() == 1 || res.size() == 2, "set size", d);
            ok &= expect(!res.trace.empty(), "trace", d);
            bool flat = true;
            for (long long l : data.lambda) flat = flat && l == 0;
            for (long long dl : data.delta) flat = flat && dl == 0;
            ok &= expect((res.size() == 1) == flat, "Gorenstein iff lambda = delta = 0", d);
            ok &= expect(flat == omega.is_zero(), "omega vanishes iff lambda = delta = 0", d);
            gorenstein += flat ? 1 : 0;
        }
        if (ok) d = std::to_string(gorenstein) + " Gorenstein cases among 1000";
        return ok;
    });

    // ----------------------------------------------------------------- 7
    h.criterion(7, "structural invariants: reflection, relations, maps, strip", [&](std::string& d) {
        std::mt19937_64 rng(987654321);
        bool ok = true;

        for (int trial = 0; trial < 300 && ok; ++trial) {
            Ladder Y = gen::random_ladder(rng, 10, 10);
            ok &= expect(reflect(reflect(Y)) == Y, "reflect involution", d);
            CornerData a = corners(Y), b = corners(reflect(Y));
            ok &= expect(a.h() == b.k() && a.k() == b.h(), "reflect swaps h and k", d);
        }

        int checked_maps = 0, strip_checked = 0;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            Ladder Y = gen::random_ladder_where(rng, 9, 9,
                                                [](const Ladder& Y) { return two_connected(Y); });
            CornerData cd = corners(Y);
            FacetModel fm(Y);
            // relation identity behind the q' classes
            for (int i = 1; i <= cd.h() + 1 && ok; ++i) {
                DivisorClass acc = qprime_class(Y, i);
                acc.q(i) += 1;
                for (int j = 1; j <= cd.k(); ++j)
                    if (cd.a(i - 1) <= cd.c(j) && cd.b(i) <= cd.d(j)) acc.p(j) += 1;
                ok &= expect(acc.is_zero(), "q' relation identity", d);
                ok &= expect(fm.class_of_col(cd.b(i)) == qprime_class(Y, i),
                             "column prime class", d);
            }
            for (MoveKind mv : {MoveKind::InvertA0B1, MoveKind::InvertAhBh1, MoveKind::InvertC1D0,
                                MoveKind::InvertCk1Dk}) {
                bool applicable = (mv == MoveKind::InvertA0B1 || mv == MoveKind::InvertAhBh1)
                                      ? cd.h() >= 1
                                      : cd.k() >= 1;
                if (!applicable) continue;
                ClassGroupMap map;
                try {
                    map = localization_map(Y, mv);
                } catch (const ladder_error&) {
                    continue;
                }
                ++checked_maps;
                CornerData cc = corners(map.codomain);
                size_t cod_rank = static_cast<size_t>(cc.h() + cc.k() + 1);
                ZMat M = map.matrix();
                ZMat MT(M.empty() ? 0 : M[0].size(), ZVec(M.size(), 0));
                for (size_t i = 0; i < M.size(); ++i)
                    for (size_t j = 0; j < M[i].size(); ++j) MT[j][i] = M[i][j];
                ok &= expect(zlin::surjective_onto(MT, cod_rank), "map surjectivity", d);
                ok &= expect(map.kernel_basis.size() + cod_rank ==
                                 static_cast<size_t>(cd.h() + cd.k() + 1),
                             "kernel rank", d);
                ok &= expect(map.apply(canonical_class(Y).second) ==
                                 canonical_class(map.codomain).second,
                             "canonical naturality", d);
            }
        }

        for (int trial = 0; trial < 50 && ok; ++trial) {
            Ladder Y = gen::random_ladder_where(rng, 8, 8,
                                                [](const Ladder& Y) { return shape(Y).one_sided; });
            for (int t = 2; t <= 3 && ok; ++t) {
                if (!has_t_minor(Y, t)) continue;
                ++strip_checked;
                StripResult sr = strip_unused(Y, t);
                std::set<Cell> removed(sr.removed.begin(), sr.removed.end());
                for (const auto& [rows, cols] : oracle::scattered_minors(Y, t))
                    for (int r : rows)
                        for (int c : cols)
                            ok &= expect(!removed.count({r, c}), "removed cell meets a minor", d);
                ok &= expect(t_connectivity(sr.kept, t, 40).connected, "kept part t-connected", d);
            }
        }
        if (ok)
            d = std::to_string(checked_maps) + " maps, " + std::to_string(strip_checked) +
                " strips checked";
        return ok;
    });

    if (h.failures == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", h.failures);
    return 1;
}
