#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "theta/theta_graph.hpp"

using namespace theta;

TEST_CASE("make_theta normalizes and validates") {
    auto g = make_theta({2, 6, 6, 6, 6, 6});
    CHECK(g.path_count() == 6);
    CHECK(g.size() == 32);
    CHECK(g.order() == 28);
    CHECK(make_theta({6, 2, 6, 6, 6, 6}) == g);
    CHECK(to_string(g) == "theta(2,6^[5])");

    CHECK_THROWS_AS((void)make_theta({1, 1, 2}), Error);
    CHECK_THROWS_AS((void)make_theta({}), Error);
    CHECK_THROWS_AS((void)make_theta({5}), Error);
    try {
        (void)make_theta({1, 1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooSmall);
    }
    try {
        (void)make_theta({1, 1, 2});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MultiEdge);
    }
    CHECK_NOTHROW((void)make_theta({1, 2})); // triangle
}

TEST_CASE("induced_coloring on the theta(2,4,4,4,6) certificate") {
    auto g = make_theta({2, 4, 4, 4, 6});
    EdgeLabeling f{{{15, 6}, {3, 18, 12, 9}, {4, 17, 13, 8}, {7, 14, 16, 5},
                    {1, 20, 10, 11, 19, 2}}};
    auto c = induced_coloring(g, f);
    CHECK(c.u == 30);
    CHECK(c.v == 30);
    for (const auto& row : c.internal)
        for (Label col : row) CHECK((col == 21 || col == 30));
    CHECK(c.count == 2);
}

TEST_CASE("induced_coloring plain sums") {
    auto g = make_theta({2, 2, 2});
    EdgeLabeling f{{{1, 2}, {3, 4}, {5, 6}}};
    auto c = induced_coloring(g, f);
    CHECK(c.u == 9);
    CHECK(c.v == 12);
    CHECK(c.internal[0][0] == 3);
    CHECK(c.internal[1][0] == 7);
    CHECK(c.internal[2][0] == 11);
    CHECK(c.count == 5);
    CHECK(c.color_of(VertexRef::u()) == 9);
    CHECK(c.color_of(VertexRef::internal(1, 1)) == 7);

    EdgeLabeling bad{{{1, 2}, {3, 4}, {5, 6, 7}}};
    CHECK_THROWS_AS((void)induced_coloring(g, bad), Error);
}

TEST_CASE("induced_coloring on the theta(2,6^[5]) table") {
    auto g = make_theta({2, 6, 6, 6, 6, 6});
    EdgeLabeling f{{{22, 11},
                    {1, 32, 12, 21, 23, 10},
                    {3, 30, 14, 19, 25, 8},
                    {4, 29, 15, 18, 26, 7},
                    {5, 28, 16, 17, 27, 6},
                    {9, 24, 20, 13, 31, 2}}};
    auto c = induced_coloring(g, f);
    CHECK(c.palette == std::set<Label>{33, 44});
}

TEST_CASE("color sums count every label twice") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        auto g = make_theta({2, 4, 4, 6});
        std::vector<Label> labels(g.size());
        std::iota(labels.begin(), labels.end(), 1);
        std::shuffle(labels.begin(), labels.end(), rng);
        EdgeLabeling f;
        size_t at = 0;
        for (int a : g.lengths()) {
            f.per_path.push_back({labels.begin() + at, labels.begin() + at + a});
            at += a;
        }
        auto c = induced_coloring(g, f);
        Label total = c.u + c.v;
        for (const auto& row : c.internal)
            for (Label col : row) total += col;
        CHECK(total == g.size() * (g.size() + 1)); // 2 * sum of labels
    }
}

TEST_CASE("reversing one path") {
    auto g = make_theta({2, 4, 4, 6});
    EdgeLabeling f{{{16, 1}, {2, 14, 3, 13}, {4, 12, 5, 11}, {6, 10, 7, 9, 8, 15}}};
    auto before = induced_coloring(g, f);
    EdgeLabeling r = f;
    r.reverse_path(3);
    auto after = induced_coloring(g, r);
    CHECK(before.u + before.v == after.u + after.v);
    auto want = before.internal[3];
    std::reverse(want.begin(), want.end());
    CHECK(after.internal[3] == want);
}

TEST_CASE("labeling json round trip and field order") {
    auto g = make_theta({2, 2, 4});
    EdgeLabeling f{{{3, 6}, {1, 8}, {4, 5, 7, 2}}};
    std::string js = labeling_to_json(g, f);
    CHECK(js == R"({"lengths":[2,2,4],"paths":[[3,6],[1,8],[4,5,7,2]]})");
    auto [g2, f2] = labeling_from_json(js);
    CHECK(g2 == g);
    CHECK(f2.per_path == f.per_path);
}

TEST_CASE("dot export") {
    auto g = make_theta({1, 2});
    EdgeLabeling f{{{3}, {1, 2}}};
    std::string dot = to_dot(g, &f);
    CHECK(dot.find("u -- v [label=3]") != std::string::npos);
    CHECK(dot.find("u -- p1_1 [label=1]") != std::string::npos);
    CHECK(dot.find("p1_1 -- v [label=2]") != std::string::npos);
}
