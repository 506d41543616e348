#include "doctest.h"

#include <algorithm>

#include "theta/verifier.hpp"

using namespace theta;

TEST_CASE("verify accepts the theta(2,4^[3],6) certificate") {
    auto g = make_theta({2, 4, 4, 4, 6});
    EdgeLabeling f{{{15, 6}, {3, 18, 12, 9}, {4, 17, 13, 8}, {7, 14, 16, 5},
                    {1, 20, 10, 11, 19, 2}}};
    auto r = verify(g, f, std::make_pair<Label, Label>(21, 30));
    CHECK(r.is_bijection);
    CHECK(r.is_local_antimagic);
    CHECK(r.palette == std::vector<Label>{21, 30});
    CHECK(r.color_count == 2);
    CHECK(r.matches_targets == true);
    CHECK(r.valid_two_coloring());
}

TEST_CASE("verify of a plain valid labeling with five colors") {
    auto g = make_theta({2, 2, 2});
    EdgeLabeling f{{{1, 2}, {3, 4}, {5, 6}}};
    auto r = verify(g, f);
    CHECK(r.is_bijection);
    CHECK(r.is_local_antimagic);
    CHECK(r.color_count == 5);
    CHECK(!r.matches_targets.has_value());
    CHECK(!r.valid_two_coloring());
}

TEST_CASE("verify reports bijection failures") {
    auto g = make_theta({2, 2, 2});
    EdgeLabeling f{{{1, 2}, {2, 3}, {4, 5}}};
    auto r = verify(g, f);
    CHECK(!r.is_bijection);
    CHECK(r.duplicates == std::vector<Label>{2});
    CHECK(r.missing == std::vector<Label>{6});
}

TEST_CASE("verify reports adjacency violations exhaustively") {
    auto g = make_theta({2, 2, 2});
    // v = 2+4+5 = 11 equals the last internal sum 6+5 = 11
    EdgeLabeling f{{{1, 2}, {3, 4}, {6, 5}}};
    auto r = verify(g, f);
    CHECK(r.is_bijection);
    CHECK(!r.is_local_antimagic);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].color == 11);
    CHECK(!r.valid_two_coloring());
}

TEST_CASE("verify handles a length-1 path") {
    auto g = make_theta({1, 2});
    EdgeLabeling ok{{{3}, {1, 2}}};
    auto r = verify(g, ok);
    CHECK(r.is_bijection);
    CHECK(r.is_local_antimagic); // u=4, v=5, internal=3

    // a length-1 path makes u and v adjacent; equal hub sums must be flagged
    auto g2 = make_theta({1, 2, 2});
    EdgeLabeling bad{{{3}, {1, 4}, {5, 2}}}; // u = 3+1+5 = 9 = 3+4+2 = v
    auto r2 = verify(g2, bad);
    CHECK(r2.is_bijection);
    CHECK(!r2.is_local_antimagic);
    REQUIRE(r2.violations.size() == 1);
    CHECK(r2.violations[0].color == 9);
}

TEST_CASE("palette is invariant under path order and u-v swap") {
    auto g = make_theta({2, 4, 4, 6});
    EdgeLabeling f{{{16, 1}, {2, 14, 3, 13}, {4, 12, 5, 11}, {6, 10, 7, 9, 8, 15}}};
    auto base = verify(g, f);

    EdgeLabeling swapped = f; // swap the two length-4 paths
    std::swap(swapped.per_path[1], swapped.per_path[2]);
    CHECK(verify(g, swapped).palette == base.palette);

    EdgeLabeling flipped = f; // reverse every path = swap roles of u and v
    for (int i = 0; i < g.path_count(); ++i) flipped.reverse_path(i);
    CHECK(verify(g, flipped).palette == base.palette);
}

TEST_CASE("verify shape errors") {
    auto g = make_theta({2, 2, 2});
    EdgeLabeling f{{{1, 2}, {3, 4}}};
    CHECK_THROWS_AS((void)verify(g, f), Error);
}

TEST_CASE("matches_targets is false on wrong targets") {
    auto g = make_theta({2, 2, 2, 2});
    EdgeLabeling f{{{8, 1}, {2, 7}, {3, 6}, {5, 4}}};
    auto r = verify(g, f, std::make_pair<Label, Label>(9, 18));
    CHECK(r.matches_targets == true);
    auto r2 = verify(g, f, std::make_pair<Label, Label>(9, 17));
    CHECK(r2.matches_targets == false);
}
