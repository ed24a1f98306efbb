#include <catch2/catch_amalgamated.hpp>

#include "ladder/connectivity.hpp"
#include "support.hpp"

using namespace ladder;

namespace {

void check_disconnection(const Ladder& Y, int t, const TConnectivity& tc)
{
    REQUIRE_FALSE(tc.connected);
    REQUIRE_FALSE(tc.z1.empty());
    REQUIRE_FALSE(tc.z2.empty());
    // partition of Y
    std::vector<Cell> all = tc.z1;
    all.insert(all.end(), tc.z2.begin(), tc.z2.end());
    std::sort(all.begin(), all.end());
    CHECK(all == Y.cells());
    // both parts are ladders in the axiom sense
    auto is_axiom = [&](const std::vector<Cell>& part) {
        std::vector<std::vector<bool>> occ(static_cast<size_t>(Y.rows()),
                                           std::vector<bool>(static_cast<size_t>(Y.cols()), false));
        for (const Cell& c : part) occ[static_cast<size_t>(c.row - 1)][static_cast<size_t>(c.col - 1)] = true;
        return detail::axiom_holds(occ);
    };
    CHECK(is_axiom(tc.z1));
    CHECK(is_axiom(tc.z2));
    // every scattered t-minor stays within one part
    std::set<Cell> in1(tc.z1.begin(), tc.z1.end());
    for (const auto& [rows, cols] : oracle::scattered_minors(Y, t)) {
        int hits1 = 0, total = 0;
        for (int r : rows)
            for (int c : cols) {
                ++total;
                hits1 += in1.count({r, c}) ? 1 : 0;
            }
        CHECK((hits1 == 0 || hits1 == total));
    }
}

} // namespace

TEST_CASE("t-connectivity of the worked ladders")
{
    CHECK(t_connectivity(fixtures::L(), 2).connected);
    auto l3 = t_connectivity(fixtures::L(), 3);
    check_disconnection(fixtures::L(), 3, l3); // vacuous: (L) has no 3-minors
    CHECK_FALSE(has_t_minor(fixtures::L(), 3));

    CHECK(t_connectivity(fixtures::O(), 2).connected);
    CHECK(t_connectivity(fixtures::O(), 3).connected);
    auto o4 = t_connectivity(fixtures::O(), 4);
    check_disconnection(fixtures::O(), 4, o4);

    auto ypp = t_connectivity(fixtures::Ypp(), 2);
    check_disconnection(fixtures::Ypp(), 2, ypp);

    // path-connected but 3-disconnected: converse of the connectivity lemma fails
    Ladder Yex = fixtures::Yex();
    CHECK(path_connected(Yex));
    CHECK(t_connectivity(Yex, 2).connected);
    auto e3 = t_connectivity(Yex, 3);
    check_disconnection(Yex, 3, e3);

    CHECK(t_connectivity(Ladder(1, 1, {1}, {1}), 1).connected);
}

TEST_CASE("t-connected implies path-connected")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        Ladder Y = gen::random_ladder(rng, 7, 7);
        for (int t = 1; t <= 3; ++t) {
            TConnectivity tc;
            try {
                tc = t_connectivity(Y, t);
            } catch (const ladder_error& e) {
                REQUIRE(e.code() == errc::too_many_components);
                continue;
            }
            if (tc.connected)
                CHECK(path_connected(Y));
            else
                check_disconnection(Y, t, tc);
        }
    }
}

TEST_CASE("component cap")
{
    // 6x6 rectangle at t=1: each cell is its own co-occurrence component
    CHECK_THROWS_MATCHES(t_connectivity(fixtures::rect(6, 6), 1), ladder_error,
                         Catch::Matchers::Predicate<ladder_error>(
                             [](const ladder_error& e) { return e.code() == errc::too_many_components; }));
}

TEST_CASE("strip golden values")
{
    // O at t = 4 keeps the full 4x4 block; six cells fall away
    StripResult o4 = strip_unused(fixtures::O(), 4);
    CHECK(o4.kept == fixtures::rect(4, 4));
    CHECK(o4.removed == std::vector<Cell>{{1, 5}, {2, 5}, {3, 5}, {5, 1}, {5, 2}, {5, 3}});

    // 3x5 example at t = 3: prose names the removed cells as column 4, but
    // the kept block is the displayed full 3x4, so column 5 is what goes
    StripResult e3 = strip_unused(fixtures::Yex(), 3);
    CHECK(e3.kept == fixtures::rect(3, 4));
    CHECK(e3.removed == std::vector<Cell>{{1, 5}, {2, 5}});

    // already t-connected: nothing to remove
    StripResult o2 = strip_unused(fixtures::O(), 2);
    CHECK(o2.kept == fixtures::O());
    CHECK(o2.removed.empty());

    CHECK_THROWS_MATCHES(strip_unused(fixtures::rect(2, 3), 4), ladder_error,
                         Catch::Matchers::Predicate<ladder_error>(
                             [](const ladder_error& e) { return e.code() == errc::no_t_minor; }));
}

TEST_CASE("strip soundness and reflection handling")
{
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 80) {
        Ladder Y = gen::random_ladder_where(rng, 8, 8, [](const Ladder& Y) {
            ShapeReport s = shape(Y);
            return s.one_sided;
        });
        for (int t = 2; t <= 3; ++t) {
            if (!has_t_minor(Y, t)) continue;
            StripResult sr = strip_unused(Y, t);
            ++done;
            // removed cells meet no scattered t-minor
            std::set<Cell> removed(sr.removed.begin(), sr.removed.end());
            for (const auto& [rows, cols] : oracle::scattered_minors(Y, t))
                for (int r : rows)
                    for (int c : cols) CHECK_FALSE(removed.count({r, c}));
            // cell counts add up and the kept part is t-connected
            CHECK(sr.kept.cell_count() + static_cast<long long>(sr.removed.size()) == Y.cell_count());
            CHECK(t_connectivity(sr.kept, t, 40).connected);
        }
    }
}
