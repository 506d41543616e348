#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "theta/constructor.hpp"
#include "theta/verifier.hpp"

using namespace theta;

namespace {

std::multiset<Label> u_ends(const EdgeLabeling& f) {
    std::multiset<Label> out;
    for (const auto& seq : f.per_path) out.insert(seq.front());
    return out;
}

VerificationReport check_two(const ThetaGraph& g, const EdgeLabeling& f) {
    auto tg = two_color_targets(g);
    REQUIRE(tg.has_value());
    auto r = verify(g, f, std::make_pair(tg->x, tg->y));
    REQUIRE(r.valid_two_coloring());
    REQUIRE(r.matches_targets == true);
    return r;
}

bool has_row(const EdgeLabeling& f, const std::vector<Label>& row) {
    return std::any_of(f.per_path.begin(), f.per_path.end(),
                       [&](const auto& seq) { return seq == row; });
}

} // namespace

TEST_CASE("case 1 with l=1 reproduces the worked example") {
    auto f = construct_case1(1);
    std::vector<std::vector<Label>> want = {
        {4, 23, 16, 11}, {5, 22, 17, 10}, {8, 19, 20, 7},
        {9, 18, 21, 6},  {12, 15, 24, 3}, {1, 26, 13, 14, 25, 2}};
    CHECK(f.per_path == want);
    auto r = check_two(make_theta({4, 4, 4, 4, 4, 6}), f);
    CHECK(r.palette == std::vector<Label>{27, 39});
    CHECK(u_ends(f) == std::multiset<Label>{1, 4, 5, 8, 9, 12});
}

TEST_CASE("case 1 with l=2") {
    auto g = make_theta(std::vector<int>{8, 8, 8, 8, 8, 8, 8, 8, 10, 10});
    auto r = check_two(g, construct_case1(2));
    CHECK(r.palette == std::vector<Label>{85, 105});
}

TEST_CASE("case 2a general recipe") {
    // l=3: theta(4,10^[8])
    auto g3 = make_theta({4, 10, 10, 10, 10, 10, 10, 10, 10});
    auto res = construct(g3);
    REQUIRE(res.construction.has_value());
    const auto& c = *res.construction;
    CHECK(c.trace.correction_set == std::vector<Label>{15});
    CHECK(has_row(c.labeling, {51, 34, 68, 17}));
    auto r = check_two(g3, c.labeling);
    CHECK(r.palette == std::vector<Label>{85, 102});

    // l=4: theta(6,14^[11])
    auto g4 = make_theta(std::vector<int>{6, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14});
    auto res4 = construct(g4);
    REQUIRE(res4.construction.has_value());
    auto B = res4.construction->trace.correction_set;
    CHECK(std::set<Label>(B.begin(), B.end()) == std::set<Label>{21, 5});
    CHECK(check_two(g4, res4.construction->labeling).palette == std::vector<Label>{161, 184});

    // l=2 is served from the fixed table
    auto g2 = make_theta({2, 6, 6, 6, 6, 6});
    auto f2 = construct_case2a(2);
    CHECK(check_two(g2, f2).palette == std::vector<Label>{33, 44});
    CHECK(has_row(f2, {22, 11}));
}

TEST_CASE("case 2b embedded tables") {
    auto g5 = make_theta({2, 4, 4, 4, 6});
    auto f5 = construct_case2b(g5);
    CHECK(has_row(f5, {15, 6}));
    CHECK(has_row(f5, {1, 20, 10, 11, 19, 2}));
    CHECK(check_two(g5, f5).palette == std::vector<Label>{21, 30});

    auto g8 = make_theta({4, 8, 8, 8, 8, 8, 10, 10});
    CHECK(check_two(g8, construct_case2b(g8)).palette == std::vector<Label>{65, 80});

    auto g11 = make_theta(std::vector<int>{6, 12, 12, 12, 12, 12, 12, 12, 14, 14, 14});
    CHECK(check_two(g11, construct_case2b(g11)).palette == std::vector<Label>{133, 154});

    CHECK_THROWS_AS((void)construct_case2b(make_theta({2, 2, 4})), Error);
}

TEST_CASE("exception tables are intact fixtures") {
    REQUIRE(exception_tables().size() == 9);
    for (const auto& t : exception_tables()) {
        CHECK(table_checksum(t.rows) == t.checksum);
        auto g = make_theta(t.lengths);
        EdgeLabeling f;
        f.per_path = t.rows;
        std::stable_sort(f.per_path.begin(), f.per_path.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        check_two(g, f);
    }
    CHECK(find_exception_table("case4_s5_t2") != nullptr);
    CHECK(find_exception_table("nope") == nullptr);
}

TEST_CASE("case 3a u-end labels match the worked examples") {
    // (l,t) = (6,6): theta(10,12,20^[6],22^[4])
    auto res = construct(make_theta(std::vector<int>{10, 12, 20, 20, 20, 20, 20, 20, 22, 22, 22, 22}));
    REQUIRE(res.construction.has_value());
    CHECK(u_ends(res.construction->labeling) ==
          std::multiset<Label>{6, 7, 8, 9, 10, 120, 22, 12, 13, 14, 15, 17});
    auto B = res.construction->trace.correction_set;
    CHECK(std::set<Label>(B.begin(), B.end()) == std::set<Label>{1, 11});

    // (l,t) = (6,7) is the embedded table
    auto res7 = construct(make_theta(std::vector<int>{8, 14, 20, 20, 20, 20, 20, 20, 22, 22, 22, 22}));
    REQUIRE(res7.construction.has_value());
    CHECK(res7.construction->trace.exception_table_id == std::string("case3a_l6_t7"));
    CHECK(has_row(res7.construction->labeling, {10, 221, 32, 199, 54, 177, 76, 155}));

    // (l,t) = (3,3): theta(4,6,8^[3],10)
    auto res3 = construct(make_theta({4, 6, 8, 8, 8, 10}));
    REQUIRE(res3.construction.has_value());
    CHECK(u_ends(res3.construction->labeling) == std::multiset<Label>{4, 24, 3, 10, 8, 6});
    Label usum = 0;
    for (Label v : u_ends(res3.construction->labeling)) usum += v;
    CHECK(usum == 55);
}

TEST_CASE("case 3b recipes and exceptions") {
    // (l,t) = (6,6): hardcoded mixed-sign correction
    auto res = construct(make_theta(std::vector<int>{10, 10, 20, 20, 20, 20, 20, 22, 22, 22, 22, 22}));
    REQUIRE(res.construction.has_value());
    CHECK(res.construction->trace.correction_set == std::vector<Label>{-9, -3, 1});
    CHECK(u_ends(res.construction->labeling) ==
          std::multiset<Label>{1, 2, 3, 4, 6, 17, 15, 19, 20, 12, 22, 132});

    // (l,t) = (6,7): B from the odd-subset lemma
    auto res7 = construct(make_theta(std::vector<int>{8, 12, 20, 20, 20, 20, 20, 22, 22, 22, 22, 22}));
    REQUIRE(res7.construction.has_value());
    auto B = res7.construction->trace.correction_set;
    CHECK(std::set<Label>(B.begin(), B.end()) == std::set<Label>{1, 3, 7});

    // (l,t) = (3,3): embedded table
    auto res3 = construct(make_theta({4, 4, 8, 8, 10, 10}));
    REQUIRE(res3.construction.has_value());
    CHECK(res3.construction->trace.exception_table_id == std::string("case3b_l3_t3"));
    CHECK(u_ends(res3.construction->labeling) == std::multiset<Label>{8, 28, 6, 10, 1, 2});

    // (l,t) = (2,2): theta(2,2,4,6), embedded table
    auto res2 = construct(make_theta({2, 2, 4, 6}));
    REQUIRE(res2.construction.has_value());
    CHECK(res2.construction->trace.exception_table_id == std::string("case3b_l2_t2"));

    // (l,t) = (4,5): the odd-subset route is impossible (delta = 7 over {1,3,5});
    // the mixed-sign fallback must be used
    auto res45 = construct(make_theta(std::vector<int>{4, 8, 12, 12, 12, 14, 14, 14}));
    REQUIRE(res45.construction.has_value());
    Label sum = 0;
    bool has_neg = false;
    for (Label b : res45.construction->trace.correction_set) {
        sum += b;
        has_neg = has_neg || b < 0;
    }
    CHECK(sum == 7);
    CHECK(has_neg);
}

TEST_CASE("case 4 worked examples") {
    // (s,t) = (7,4): default recipe
    auto res = construct(make_theta(std::vector<int>{8, 10, 14, 22, 22, 22, 22}));
    REQUIRE(res.construction.has_value());
    const auto& tr = res.construction->trace;
    CHECK(tr.delta == 6);
    CHECK(std::set<Label>(tr.correction_set.begin(), tr.correction_set.end()) ==
          std::set<Label>{1, 5});
    REQUIRE(tr.split.has_value());
    CHECK(tr.split->gamma1 == 45);
    CHECK(u_ends(res.construction->labeling) == std::multiset<Label>{1, 45, 2, 8, 4, 6, 66});

    // (s,t) = (7,2): the alpha = 2s-4 variant
    auto res2 = construct(make_theta(std::vector<int>{4, 10, 18, 22, 22, 22, 22}));
    REQUIRE(res2.construction.has_value());
    CHECK(u_ends(res2.construction->labeling) == std::multiset<Label>{10, 32, 9, 3, 7, 5, 66});

    // (s,t) = (5,2): embedded fixture table
    auto res5 = construct(make_theta({4, 6, 10, 14, 14}));
    REQUIRE(res5.construction.has_value());
    CHECK(res5.construction->trace.exception_table_id == std::string("case4_s5_t2"));
    CHECK(has_row(res5.construction->labeling, {39, 10, 46, 3}));

    // (s,t) = (7,3): embedded fixture table
    auto res73 = construct(make_theta(std::vector<int>{6, 10, 16, 22, 22, 22, 22}));
    REQUIRE(res73.construction.has_value());
    CHECK(res73.construction->trace.exception_table_id == std::string("case4_s7_t3"));
    CHECK(has_row(res73.construction->labeling, {66, 55, 77, 44, 88, 33, 99, 22, 110, 11}));
}

TEST_CASE("case 4 parameter corners") {
    // (13,9): alpha = 3, no correction needed
    auto f = construct_case4(13, 9);
    check_two(make_theta(std::vector<int>{18, 22, 28, 46, 46, 46, 46, 46, 46, 46, 46, 46, 46}), f);

    // (6,2) and (6,3): outside every printed recipe; the generic fallbacks apply
    check_two(make_theta({4, 8, 14, 18, 18, 18}), construct_case4(6, 2));
    check_two(make_theta({6, 8, 12, 18, 18, 18}), construct_case4(6, 3));

    // (13,3): low-t delta* collides with an excluded subset value
    check_two(make_theta(std::vector<int>{6, 22, 40, 46, 46, 46, 46, 46, 46, 46, 46, 46, 46}),
              construct_case4(13, 3));

    // (4,1) and (4,2): smallest family members
    check_two(make_theta({2, 4, 8, 10}), construct_case4(4, 1));
    check_two(make_theta({4, 4, 6, 10}), construct_case4(4, 2));

    CHECK_THROWS_AS((void)construct_case4(4, 3), Error);  // t out of range
    CHECK_THROWS_AS((void)construct_case4(3, 1), Error);  // s too small
}

TEST_CASE("K_{2,s} construction") {
    auto f4 = construct_k2s(4);
    auto r = check_two(make_theta({2, 2, 2, 2}), f4);
    CHECK(r.palette == std::vector<Label>{9, 18});
    Label usum = 0;
    for (const auto& seq : f4.per_path) {
        usum += seq.front();
        CHECK(seq[0] + seq[1] == 9);
    }
    CHECK(usum == 18);

    auto f6 = construct_k2s(6);
    auto r6 = check_two(make_theta({2, 2, 2, 2, 2, 2}), f6);
    CHECK(r6.palette == std::vector<Label>{13, 39});

    CHECK_THROWS_AS((void)construct_k2s(5), Error);
    CHECK_THROWS_AS((void)construct_k2s(2), Error);
}

TEST_CASE("construct refuses non-members") {
    auto res = construct(make_theta({3, 3, 3}));
    CHECK(!res.construction.has_value());
    CHECK(res.classification.refusal == RefusalReason::OddLength);
    CHECK(!construct(make_theta({2, 2, 4})).construction.has_value());
    CHECK(!construct(make_theta({4, 6})).construction.has_value());
}

TEST_CASE("construct is sound across the small atlas") {
    for (const auto& [g, cls] : enumerate_family_members(300)) {
        auto res = construct(g);
        REQUIRE(res.construction.has_value());
        check_two(g, res.construction->labeling);
        Label usum = 0;
        for (Label v : res.construction->trace.u_end_labels) usum += v;
        CHECK(usum == cls.targets->y);
        if (res.construction->trace.split)
            CHECK(res.construction->trace.split->gamma1 + res.construction->trace.split->gamma2 ==
                  cls.targets->y);
    }
}

TEST_CASE("step blocks are disjoint progressions covering [1,m]") {
    // dual route to the verifier's bijection check: the generating AP pairs
    // of each path must be pairwise disjoint and cover [1,m] exactly
    struct Inst {
        std::vector<APSpec> specs;
        long long m;
    };
    std::vector<Inst> insts;
    {
        // theta(8^[8],10^[2]): blocks A_{2l}(a;8l+4), A_{2l}(x-a;-8l-4), ...
        int l = 2;
        Label x = 16LL * l * l + 10 * l + 1;
        Label d = 8 * l + 4;
        Inst in;
        in.m = 16LL * l * l + 10 * l;
        std::vector<Label> u2;
        for (Label a = 3 * l + 1; a <= 4 * l + 1; ++a) u2.push_back(a);
        for (Label a = 4 * l + 3; a <= 5 * l + 1; ++a) u2.push_back(a);
        u2.push_back(5 * l + 3);
        u2.push_back(6 * l + 3);
        for (Label a = 7 * l + 5; a <= 8 * l + 4; ++a) u2.push_back(a);
        for (Label a : u2) {
            in.specs.push_back({a, d, 2 * l});
            in.specs.push_back({x - a, -d, 2 * l});
        }
        for (Label i = 1; i <= l; ++i) {
            in.specs.push_back({i, d, 2 * l + 1});
            in.specs.push_back({x - i, -d, 2 * l + 1});
        }
        insts.push_back(in);
    }
    {
        // theta(4,10^[8]): R blocks plus the example-consistent Q spec
        int l = 3;
        Label x = 12LL * l * l - 8 * l + 1;
        Label d = 6 * l - 1;
        Inst in;
        in.m = 12LL * l * l - 8 * l;
        in.specs.push_back({static_cast<Label>(l) * (6 * l - 1), d, l - 1});
        in.specs.push_back({static_cast<Label>(l - 1) * (6 * l - 1), -d, l - 1});
        for (Label i = 1; i <= 3 * l - 1; ++i) {
            in.specs.push_back({i, d, 2 * l - 1});
            in.specs.push_back({x - i, -d, 2 * l - 1});
        }
        insts.push_back(in);
    }
    for (const auto& in : insts) {
        std::set<Label> all;
        for (size_t i = 0; i < in.specs.size(); ++i) {
            for (size_t j = i + 1; j < in.specs.size(); ++j)
                REQUIRE(ap_disjoint(in.specs[i], in.specs[j]));
            for (Label v : ap_terms(in.specs[i])) {
                REQUIRE(v >= 1);
                REQUIRE(v <= in.m);
                all.insert(v);
            }
        }
        CHECK(static_cast<long long>(all.size()) == in.m);
    }
}

TEST_CASE("every family-4 parameter pair up to s=64 constructs") {
    for (int s = 4; s <= 64; ++s) {
        int k = s / 4, lo, hi;
        switch (s % 4) {
        case 0: lo = k; hi = 3 * k - 1; break;
        case 1: lo = k; hi = 3 * k; break;
        case 2: lo = k + 1; hi = 3 * k; break;
        default: lo = k + 1; hi = 3 * k + 1; break;
        }
        for (int t = lo; t <= hi; ++t) {
            std::vector<int> lengths{2 * t, 4 * s - 6 - 2 * t, 2 * s - 4};
            lengths.insert(lengths.end(), s - 3, 4 * s - 6);
            check_two(make_theta(lengths), construct_case4(s, t));
        }
    }
}

TEST_CASE("trace serialization carries the wire fields") {
    auto res = construct(make_theta({4, 6, 10, 14, 14}));
    REQUIRE(res.construction.has_value());
    auto js = trace_to_json(res.construction->trace);
    CHECK(js.find("\"family\":\"F4\"") != std::string::npos);
    CHECK(js.find("\"exception_table\":\"case4_s5_t2\"") != std::string::npos);
    CHECK(js.find("\"x\":49") != std::string::npos);
    CHECK(js.find("\"y\":56") != std::string::npos);
}
