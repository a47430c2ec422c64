#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wmn/estimators.hpp"
#include "wmn/model.hpp"

using namespace wmn;

namespace {

WmnGraph chain5() {
    return WmnGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {1, 1, 1, 1, 1},
                    {"A", "B", "C", "D", "E"});
}

LinkChannelMap alternating(const WmnGraph& g) {
    return LinkChannelMap::from_link_channels(
        g, {{Link(0, 1), {1}}, {Link(1, 2), {2}}, {Link(2, 3), {1}}, {Link(3, 4), {2}}});
}

LinkChannelMap pairwise(const WmnGraph& g) {
    return LinkChannelMap::from_link_channels(
        g, {{Link(0, 1), {1}}, {Link(1, 2), {1}}, {Link(2, 3), {2}}, {Link(3, 4), {2}}});
}

LinkChannelMap singleton_map(const WmnGraph& g, ChannelId a, ChannelId b) {
    return LinkChannelMap::from_link_channels(g, {{Link(0, 1), {a}}, {Link(1, 2), {b}}});
}

} // namespace

TEST_CASE("path enumeration on the chain") {
    WmnGraph g = chain5();

    auto one = enumerate_xls(g, 1);
    REQUIRE(one.size() == 4);
    CHECK(one[0].links == std::vector<Link>{Link(0, 1)});

    auto two = enumerate_xls(g, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].links == std::vector<Link>{Link(0, 1), Link(1, 2)});
    CHECK(two[1].links == std::vector<Link>{Link(1, 2), Link(2, 3)});
    CHECK(two[2].links == std::vector<Link>{Link(2, 3), Link(3, 4)});
    CHECK(two[0].nodes() == std::vector<NodeId>{0, 1, 2});

    CHECK(enumerate_xls(g, 4).size() == 1);
    CHECK(enumerate_xls(g, 5).empty());
    CHECK_THROWS_AS(enumerate_xls(g, 0), ValidationError);
}

TEST_CASE("path enumeration on a triangle counts each path once") {
    WmnGraph g(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 1});
    CHECK(enumerate_xls(g, 1).size() == 3);
    auto two = enumerate_xls(g, 2);
    CHECK(two.size() == 3);
    for (const auto& s : two) {
        auto nodes = s.nodes();
        CHECK(nodes.front() < nodes.back());
    }
}

TEST_CASE("path enumeration matches the tuple oracle") {
    Rng rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = gen::random_graph(rng, 7);
        const int x = 1 + static_cast<int>(rng.below(3));
        auto sets = enumerate_xls(g, x);
        std::vector<std::vector<NodeId>> got;
        for (const auto& s : sets) got.push_back(s.nodes());
        std::sort(got.begin(), got.end());
        CHECK(got == oracle::simple_paths(g, x));
        // Sorted, unique, canonical.
        CHECK(std::is_sorted(sets.begin(), sets.end()));
        CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    }
}

TEST_CASE("weight anchors: distinct, identical, mixed and three-link cases") {
    WmnGraph g3(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    XLinkSet set2{{Link(0, 1), Link(1, 2)}};

    CHECK(xls_weight(set2, singleton_map(g3, 1, 2)).value == 2.0);
    CHECK(xls_weight(set2, singleton_map(g3, 1, 1)).value == 0.0);

    auto both = LinkChannelMap::from_link_channels(g3,
                                                   {{Link(0, 1), {1, 2}}, {Link(1, 2), {1, 2}}});
    CHECK(xls_weight(set2, both).value == 1.0); // (0 + 2 + 2 + 0) / 4

    WmnGraph g4(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
    auto m = LinkChannelMap::from_link_channels(
        g4, {{Link(0, 1), {1}}, {Link(1, 2), {1}}, {Link(2, 3), {2}}});
    XLinkSet set3{{Link(0, 1), Link(1, 2), Link(2, 3)}};
    CHECK(xls_weight(set3, m).value == 1.0);
}

TEST_CASE("weight of a set containing a dead link is zero and flagged") {
    WmnGraph g3(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    auto lcm = LinkChannelMap::from_link_channels(g3, {{Link(0, 1), {1}}});
    XLinkSet set{{Link(0, 1), Link(1, 2)}};
    auto w = xls_weight(set, lcm);
    CHECK(w.value == 0.0);
    CHECK(w.dead);
    CHECK(!w.sampled);
}

TEST_CASE("weights stay within [0, x] and sampling kicks in beyond the cap") {
    WmnGraph g4(4, {{0, 1}, {1, 2}, {2, 3}}, {3, 3, 3, 3});
    auto lcm = LinkChannelMap::from_link_channels(
        g4, {{Link(0, 1), {1, 2, 3}}, {Link(1, 2), {1, 2, 3}}, {Link(2, 3), {1, 2, 3}}});
    XLinkSet set{{Link(0, 1), Link(1, 2), Link(2, 3)}};

    auto exact = xls_weight(set, lcm);
    CHECK(!exact.sampled);
    CHECK(exact.value >= 0.0);
    CHECK(exact.value <= 3.0);

    // 27 combinations exceed a cap of 8, so the value becomes an estimate.
    auto sampled = xls_weight(set, lcm, 8);
    CHECK(sampled.sampled);
    CHECK(sampled.value >= 0.0);
    CHECK(sampled.value <= 3.0);
    // Deterministic: same inputs, same estimate.
    CHECK(xls_weight(set, lcm, 8).value == sampled.value);

    CHECK_THROWS_AS(xls_weight(set, lcm, 0), ValidationError);
    CHECK_THROWS_AS(xls_weight(XLinkSet{}, lcm), ValidationError);
}

TEST_CASE("cumulative weight separates the two chain patterns") {
    WmnGraph g = chain5();

    auto alt = cxls_wt(g, alternating(g), 2);
    REQUIRE(alt.per_set.size() == 3);
    CHECK(alt.per_set[0].second.value == 2.0);
    CHECK(alt.per_set[1].second.value == 2.0);
    CHECK(alt.per_set[2].second.value == 2.0);
    CHECK(alt.total == 6.0);
    CHECK(!alt.any_dead);

    auto pw = cxls_wt(g, pairwise(g), 2);
    CHECK(pw.per_set[0].second.value == 0.0);
    CHECK(pw.per_set[1].second.value == 2.0);
    CHECK(pw.per_set[2].second.value == 0.0);
    CHECK(pw.total == 2.0);

    CHECK(alt.total > pw.total);
}

TEST_CASE("the pairwise chain pattern is realizable per node and both routes agree") {
    WmnGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {1, 1, 2, 1, 1}, {"A", "B", "C", "D", "E"});
    ChannelSet cs({1, 2});
    ChannelAssignment ca({{1}, {1}, {1, 2}, {2}, {2}});
    auto from_nodes = LinkChannelMap::from_assignment(g, ca);
    CHECK(from_nodes == pairwise(g));
    auto r = cxls_wt(g, ca, cs, 2);
    CHECK(r.total == 2.0);
}

TEST_CASE("no set of the requested length yields an empty zero result") {
    WmnGraph g(2, {{0, 1}}, {1, 1});
    auto lcm = LinkChannelMap::from_link_channels(g, {{Link(0, 1), {1}}});
    auto r = cxls_wt(g, lcm, 2);
    CHECK(r.total == 0.0);
    CHECK(r.per_set.empty());
}

TEST_CASE("disjoint singleton channels reach the upper bound, one channel the lower") {
    WmnGraph g = chain5();
    auto distinct = LinkChannelMap::from_link_channels(
        g, {{Link(0, 1), {1}}, {Link(1, 2), {2}}, {Link(2, 3), {3}}, {Link(3, 4), {4}}});
    auto top = cxls_wt(g, distinct, 2);
    CHECK(top.total == 2.0 * 3.0); // x * set count

    auto mono = LinkChannelMap::from_link_channels(
        g, {{Link(0, 1), {1}}, {Link(1, 2), {1}}, {Link(2, 3), {1}}, {Link(3, 4), {1}}});
    CHECK(cxls_wt(g, mono, 2).total == 0.0);
}

TEST_CASE("cumulative weight matches the oracle exactly") {
    Rng rng(55555);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = gen::random_graph(rng, 7);
        auto cs = gen::random_channels(rng, 3);
        auto lcm = LinkChannelMap::from_assignment(g, gen::random_assignment(rng, g, cs));
        const int x = 1 + static_cast<int>(rng.below(3));

        auto got = cxls_wt(g, lcm, x);
        auto want = oracle::cxls(g, lcm, x);
        REQUIRE(got.per_set.size() == want.per_path.size());
        for (const auto& [set, w] : got.per_set) {
            CHECK(w.value == want.per_path.at(set.nodes()));
        }
        CHECK(got.total == want.total);
    }
}

TEST_CASE("relabeling channels changes no estimator value") {
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gen::random_graph(rng, 7);
        auto cs = gen::random_channels(rng, 4);
        auto ca = gen::random_assignment(rng, g, cs);
        auto [cs2, ca2] = gen::relabel(rng, cs, ca);
        const int x = 1 + static_cast<int>(rng.below(3));

        auto a = LinkChannelMap::from_assignment(g, ca);
        auto b = LinkChannelMap::from_assignment(g, ca2);
        CHECK(cxls_wt(g, a, x).total == cxls_wt(g, b, x).total);
        CHECK(cdal_cost(g, a, cs) == cdal_cost(g, b, cs2));
    }
}

TEST_CASE("channel-use cost: equal for both chain patterns, extreme for one channel") {
    WmnGraph g = chain5();
    ChannelSet cs({1, 2});

    const double alt = cdal_cost(g, alternating(g), cs);
    const double pw = cdal_cost(g, pairwise(g), cs);
    CHECK(alt == 0.0);
    CHECK(pw == 0.0);
    CHECK(alt == pw);

    auto mono = LinkChannelMap::from_link_channels(
        g, {{Link(0, 1), {1}}, {Link(1, 2), {1}}, {Link(2, 3), {1}}, {Link(3, 4), {1}}});
    CHECK(cdal_cost(g, mono, cs) == 2.0);

    WmnGraph pairg(2, {{0, 1}}, {2, 2});
    auto half = LinkChannelMap::from_link_channels(pairg, {{Link(0, 1), {1, 2}}});
    CHECK(cdal_cost(pairg, half, cs) == 0.0);

    // Dead links contribute to no channel at all.
    auto dead = LinkChannelMap::from_link_channels(g, {{Link(0, 1), {1}}, {Link(1, 2), {2}}});
    CHECK(cdal_cost(g, dead, cs) == 0.0);

    auto foreign = LinkChannelMap::from_link_channels(g, {{Link(0, 1), {9}}});
    CHECK_THROWS_AS(cdal_cost(g, foreign, cs), ValidationError);
}

TEST_CASE("channel-use cost agrees with the oracle") {
    Rng rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = gen::random_graph(rng, 8);
        auto cs = gen::random_channels(rng, 4);
        auto lcm = LinkChannelMap::from_assignment(g, gen::random_assignment(rng, g, cs));
        CHECK(cdal_cost(g, lcm, cs) == doctest::Approx(oracle::cdal(g, lcm, cs)).epsilon(1e-12));
    }
}
