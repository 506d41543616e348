#include "theta/feasibility.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace theta {

bool parity_check(const ThetaGraph& g) {
    if (g.path_count() < 3) return false; // s=2 is a cycle, chi_la 3
    for (int a : g.lengths())
        if (a % 2 != 0) return false;
    return true;
}

std::optional<TwoColorTargets> two_color_targets(const ThetaGraph& g) {
    if (!parity_check(g))
        throw Error(ErrorCode::ParityFailed, "two_color_targets: parity gate failed");
    TwoColorTargets t;
    t.m = g.size();
    t.s = g.path_count();
    t.x = t.m + 1;
    long long denom = t.m - 2 * t.s + 4; // = 2|Y| > 0
    if ((t.m * (t.m + 1)) % denom != 0) return std::nullopt;
    t.y = t.m * (t.m + 1) / denom;
    t.size_x = t.m / 2;
    t.size_y = t.m / 2 - t.s + 2;
    t.gap = t.y - t.x;
    return t;
}

std::string to_string(Family f) {
    switch (f) {
    case Family::K2S: return "K2S";
    case Family::F1: return "F1";
    case Family::F2A: return "F2A";
    case Family::F2B: return "F2B";
    case Family::F3A: return "F3A";
    case Family::F3B: return "F3B";
    default: return "F4";
    }
}

std::string to_string(RefusalReason r) {
    switch (r) {
    case RefusalReason::OddLength: return "OddLength";
    case RefusalReason::Cycle: return "Cycle";
    case RefusalReason::K23OddS: return "K23OddS";
    default: return "NoFamily";
    }
}

namespace {

std::vector<int> f1_lengths(int l) {
    std::vector<int> v(3 * l + 2, 4 * l);
    v.insert(v.end(), l, 4 * l + 2);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> f2a_lengths(int l) {
    std::vector<int> v{2 * l - 2};
    v.insert(v.end(), 3 * l - 1, 4 * l - 2);
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<std::pair<int, std::vector<int>>>& f2b_graphs() {
    static const std::vector<std::pair<int, std::vector<int>>> gs = {
        {5, {2, 4, 4, 4, 6}},
        {8, {4, 8, 8, 8, 8, 8, 10, 10}},
        {11, {6, 12, 12, 12, 12, 12, 12, 12, 14, 14, 14}},
    };
    return gs;
}

std::vector<int> f3a_lengths(int l, int t) {
    std::vector<int> v{4 * l - 2 - 2 * t, 2 * t};
    v.insert(v.end(), l, 4 * l - 4);
    v.insert(v.end(), l - 2, 4 * l - 2);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> f3b_lengths(int l, int t) {
    std::vector<int> v{4 * l - 2 - 2 * t, 2 * t - 2};
    v.insert(v.end(), l - 1, 4 * l - 4);
    v.insert(v.end(), l - 1, 4 * l - 2);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> f4_lengths(int s, int t) {
    std::vector<int> v{2 * t, 4 * s - 6 - 2 * t, 2 * s - 4};
    v.insert(v.end(), s - 3, 4 * s - 6);
    std::sort(v.begin(), v.end());
    return v;
}

// integer t-range of family 4, from the proof's table
std::pair<int, int> f4_trange(int s) {
    int k = s / 4;
    switch (s % 4) {
    case 0: return {k, 3 * k - 1};
    case 1: return {k, 3 * k};
    case 2: return {k + 1, 3 * k};
    default: return {k + 1, 3 * k + 1};
    }
}

// integer solution of q(l) = m for quadratic a*l^2 + b*l + c, scanning the
// (small) positive root neighbourhood
std::optional<int> solve_quadratic(long long A, long long B, long long C, long long m) {
    // A l^2 + B l + C = m
    for (long long l = 1;; ++l) {
        long long v = A * l * l + B * l + C;
        if (v == m) return static_cast<int>(l);
        if (v > m) return std::nullopt;
    }
}

} // namespace

FamilyClassification classify_family(const ThetaGraph& g) {
    FamilyClassification out;
    const auto& ls = g.lengths();
    int s = g.path_count();
    long long m = g.size();

    for (int a : ls)
        if (a % 2 != 0) {
            out.refusal = RefusalReason::OddLength;
            return out;
        }
    if (s == 2) {
        out.refusal = RefusalReason::Cycle;
        return out;
    }

    bool all_two = std::all_of(ls.begin(), ls.end(), [](int a) { return a == 2; });
    if (all_two && s % 2 != 0) {
        out.refusal = RefusalReason::K23OddS;
        return out;
    }

    auto try_match = [&](Family fam, const std::vector<int>& want, FamilyParams params) {
        if (ls == want) out.all_matches.push_back({fam, params});
    };

    if (all_two && s % 2 == 0 && s >= 4)
        out.all_matches.push_back({Family::K2S, {s, -1, -1}});

    for (const auto& [fs, lengths] : f2b_graphs())
        if (ls == lengths) out.all_matches.push_back({Family::F2B, {fs, -1, -1}});

    if (auto l = solve_quadratic(16, 10, 0, m); l && *l >= 1)
        try_match(Family::F1, f1_lengths(*l), {4 * *l + 2, *l, -1});

    if (auto l = solve_quadratic(12, -8, 0, m); l && *l >= 2)
        try_match(Family::F2A, f2a_lengths(*l), {3 * *l, *l, -1});

    if (auto l = solve_quadratic(8, -10, 2, m); l && *l >= 2) {
        for (int t = *l; 4 * t <= 5 * *l - 2; ++t)
            try_match(Family::F3A, f3a_lengths(*l, t), {2 * *l, *l, t});
        for (int t = *l; 4 * t <= 5 * *l; ++t)
            try_match(Family::F3B, f3b_lengths(*l, t), {2 * *l, *l, t});
    }

    if (auto fs = solve_quadratic(4, -12, 8, m); fs && *fs >= 4) {
        auto [lo, hi] = f4_trange(*fs);
        for (int t = lo; t <= hi; ++t)
            try_match(Family::F4, f4_lengths(*fs, t), {*fs, -1, t});
    }

    if (out.all_matches.empty()) {
        out.refusal = RefusalReason::NoFamily;
        return out;
    }
    // fixed priority for the primary verdict
    const Family prio[] = {Family::K2S, Family::F2B, Family::F1, Family::F2A,
                           Family::F3A, Family::F3B, Family::F4};
    for (Family f : prio) {
        for (const auto& match : out.all_matches)
            if (match.family == f) {
                out.primary = match;
                break;
            }
        if (out.primary) break;
    }
    out.targets = two_color_targets(g);
    if (!out.targets)
        throw Error(ErrorCode::ConstructionBug,
                    "classify_family: family member without integral targets");
    return out;
}

std::string classification_to_json(const FamilyClassification& c) {
    nlohmann::ordered_json j;
    if (c.two_chromatic()) {
        j["verdict"] = "TwoChromatic";
        j["family"] = to_string(c.primary->family);
        nlohmann::ordered_json p;
        p["s"] = c.primary->params.s;
        if (c.primary->params.l >= 0) p["l"] = c.primary->params.l;
        if (c.primary->params.t >= 0) p["t"] = c.primary->params.t;
        j["params"] = p;
        j["targets"] = {{"m", c.targets->m}, {"x", c.targets->x}, {"y", c.targets->y}};
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto& match : c.all_matches)
            all.push_back(to_string(match.family));
        j["all_matches"] = all;
    } else {
        j["verdict"] = "NotTwo";
        j["reason"] = to_string(*c.refusal);
    }
    return j.dump();
}

std::vector<DiophantineCandidate> diophantine_candidates(int s) {
    if (s < 3)
        throw Error(ErrorCode::OutOfRange, "diophantine_candidates: s must be >= 3");
    std::vector<DiophantineCandidate> out;
    long long rhs = 8LL * (s - 2) * (2LL * s - 3);
    for (long long a : {8LL, 6LL, 4LL, 2LL}) {
        if (rhs % a != 0) continue;
        long long b = rhs / a;
        if (b % 2 != 0 || b < a) continue;
        long long y = (a + b) / 2 + 4LL * s - 7;
        if (2 * y < 2LL * s * s + s) continue; // y >= (2s^2+s)/2
        long long t = (b - a) / 2;
        if ((y - 1 + t) % 2 != 0) continue; // both roots share parity
        std::vector<long long> roots{(y - 1 + t) / 2};
        if (t != 0) roots.push_back((y - 1 - t) / 2);
        for (long long mm : roots) {
            if (mm % 2 != 0 || mm < 2LL * s) continue; // even size; m = 2s is K_{2,s}
            DiophantineCandidate c;
            c.s = s;
            c.a = a;
            c.b = b;
            c.t = t;
            c.y = y;
            c.m = mm;
            c.x = mm + 1;
            c.case_tag = static_cast<int>((8 - a) / 2 + 1); // 8->1, 6->2, 4->3, 2->4
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::pair<ThetaGraph, FamilyClassification>>
enumerate_family_members(long long max_m) {
    std::map<std::vector<int>, ThetaGraph> uniq;
    auto add = [&](std::vector<int> lengths) {
        long long m = 0;
        for (int a : lengths) m += a;
        if (m > max_m) return;
        ThetaGraph g = make_theta(std::move(lengths));
        uniq.emplace(g.lengths(), g);
    };

    for (int s = 4; 2LL * s <= max_m; s += 2)
        add(std::vector<int>(s, 2)); // K_{2,s}
    for (int l = 1; 16LL * l * l + 10 * l <= max_m; ++l)
        add(f1_lengths(l));
    for (int l = 2; 12LL * l * l - 8 * l <= max_m; ++l)
        add(f2a_lengths(l));
    for (const auto& [fs, lengths] : f2b_graphs())
        add(lengths);
    for (int l = 2; 8LL * l * l - 10 * l + 2 <= max_m; ++l) {
        for (int t = l; 4 * t <= 5 * l - 2; ++t)
            add(f3a_lengths(l, t));
        for (int t = l; 4 * t <= 5 * l; ++t)
            add(f3b_lengths(l, t));
    }
    for (int s = 4; 4LL * s * s - 12 * s + 8 <= max_m; ++s) {
        auto [lo, hi] = f4_trange(s);
        for (int t = lo; t <= hi; ++t)
            add(f4_lengths(s, t));
    }

    std::vector<std::pair<ThetaGraph, FamilyClassification>> out;
    out.reserve(uniq.size());
    for (auto& [lengths, g] : uniq) {
        FamilyClassification c = classify_family(g);
        if (!c.two_chromatic())
            throw Error(ErrorCode::ConstructionBug,
                        "enumerate_family_members: generated non-member " + to_string(g));
        out.emplace_back(g, std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first.path_count() != b.first.path_count())
            return a.first.path_count() < b.first.path_count();
        return a.first.lengths() < b.first.lengths();
    });
    return out;
}

} // namespace theta
