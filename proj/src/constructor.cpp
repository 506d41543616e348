#include "theta/constructor.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "theta/verifier.hpp"

namespace theta {

namespace {

std::vector<Label> complete_seq(Label alpha1, int r, Label x, Label y) {
    return complete_path_labels(alpha1, r, x, y).interleaved();
}

struct Row {
    std::vector<Label> seq;
    Label alpha1 = 0;
    bool reversed = false;
    bool from_split = false;
};

struct Build {
    std::vector<Row> rows;
    Label delta = 0;
    std::vector<Label> correction_set;
    std::optional<ConstructionTrace::SplitInfo> split;
    std::optional<std::string> table_id;
};

Build from_table(const std::string& id) {
    const ExceptionTable* t = find_exception_table(id);
    if (!t)
        throw Error(ErrorCode::ConstructionBug, "missing exception table " + id);
    if (table_checksum(t->rows) != t->checksum)
        throw Error(ErrorCode::ConstructionBug, "exception table drift in " + id);
    Build b;
    b.table_id = id;
    for (const auto& row : t->rows)
        b.rows.push_back({row, row.front(), false, false});
    return b;
}

Build build_k2s(int s) {
    if (s < 4 || s % 2 != 0)
        throw Error(ErrorCode::BadParams, "construct_k2s: need even s >= 4");
    Label y = static_cast<Label>(s) * (2 * s + 1) / 2;
    Label delta = y - static_cast<Label>(s) * (s + 1) / 2; // = s^2/2
    auto sel = odd_subset_with_sum(s, delta);
    std::vector<char> rev(s + 1, 0);
    for (Label b : sel.chosen) rev[(2 * s + 1 - b) / 2] = 1;
    Build out;
    out.delta = delta;
    out.correction_set = sel.chosen;
    for (int i = 1; i <= s; ++i) {
        Row r{{Label(i), Label(2 * s + 1 - i)}, Label(i), rev[i] != 0, false};
        if (r.reversed) std::reverse(r.seq.begin(), r.seq.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

Build build_case1(int l) {
    if (l < 1) throw Error(ErrorCode::BadParams, "construct_case1: need l >= 1");
    Label x = 16LL * l * l + 10 * l + 1;
    Label y = 16LL * l * l + 18 * l + 5;
    std::vector<Label> u2;
    for (Label a = 3 * l + 1; a <= 4 * l + 1; ++a) u2.push_back(a);
    for (Label a = 4 * l + 3; a <= 5 * l + 1; ++a) u2.push_back(a);
    u2.push_back(5 * l + 3);
    u2.push_back(6 * l + 3);
    for (Label a = 7 * l + 5; a <= 8 * l + 4; ++a) u2.push_back(a);
    Build out;
    for (Label a : u2)
        out.rows.push_back({complete_seq(a, 2 * l, x, y), a, false, false});
    for (Label i = 1; i <= l; ++i)
        out.rows.push_back({complete_seq(i, 2 * l + 1, x, y), i, false, false});
    return out;
}

Build build_case2a(int l) {
    if (l < 2) throw Error(ErrorCode::BadParams, "construct_case2a: need l >= 2");
    if (l == 2) return from_table("case2a_l2");
    Label x = 12LL * l * l - 8 * l + 1;
    Label y = 12LL * l * l - 2 * l;
    Label delta = static_cast<Label>(l) * (3 * l + 1) / 2;
    auto sel = odd_subset_with_sum(3 * l - 1, delta);
    std::vector<char> in_b(6 * l, 0);
    for (Label b : sel.chosen) in_b[b] = 1;
    Build out;
    out.delta = delta;
    out.correction_set = sel.chosen;
    out.rows.push_back({complete_seq(static_cast<Label>(l) * (6 * l - 1), l - 1, x, y),
                        static_cast<Label>(l) * (6 * l - 1), false, false});
    for (Label i = 1; i <= 3 * l - 1; ++i) {
        Row r{complete_seq(i, 2 * l - 1, x, y), i, in_b[6 * l - 1 - 2 * i] != 0, false};
        if (r.reversed) std::reverse(r.seq.begin(), r.seq.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

// splits a merged block into two (u,v)-paths at an even edge count
void push_split(Build& out, const std::vector<Label>& merged, Label alpha1, int first_len,
                bool rev1 = false, bool rev2 = false) {
    Row a{{merged.begin(), merged.begin() + first_len}, alpha1, rev1, true};
    Row b{{merged.begin() + first_len, merged.end()}, alpha1, rev2, true};
    if (rev1) std::reverse(a.seq.begin(), a.seq.end());
    if (rev2) std::reverse(b.seq.begin(), b.seq.end());
    out.split = ConstructionTrace::SplitInfo{alpha1, first_len,
                                             merged[first_len], merged[first_len - 1]};
    out.rows.push_back(std::move(a));
    out.rows.push_back(std::move(b));
}

Build build_case3a(int l, int t) {
    if (l < 2 || t < l || 4 * t > 5 * l - 2)
        throw Error(ErrorCode::BadParams, "construct_case3a: need 2 <= l <= t <= (5l-2)/4");
    if (l == 6 && t == 7) return from_table("case3a_l6_t7");
    Label x = 8LL * l * l - 10 * l + 2 + 1;
    Label y = 8LL * l * l - 6 * l + 1;
    Label delta = static_cast<Label>(4 * l - 2) * (t - l) + 2 * l;
    std::vector<Label> avail;
    for (int i = 1; i <= l; ++i) avail.push_back(2 * l + 1 - 2 * i); // reverse R_i
    for (int j = 1; j <= l - 2; ++j) avail.push_back(1 - 2 * j);     // reverse T_j
    auto B = signed_subset_with_sum(avail, delta);
    if (!B)
        throw Error(ErrorCode::ConstructionBug, "construct_case3a: no correction subset");
    auto in_b = [&](Label v) { return std::find(B->begin(), B->end(), v) != B->end(); };
    Build out;
    out.delta = delta;
    out.correction_set = *B;
    push_split(out, complete_seq(2 * l - 2, 2 * l - 1, x, y), 2 * l - 2, 4 * l - 2 - 2 * t);
    for (Label i = 1; i <= l; ++i) {
        Row r{complete_seq(2 * l - 2 + i, 2 * l - 2, x, y), 2 * l - 2 + i,
              in_b(2 * l + 1 - 2 * i), false};
        if (r.reversed) std::reverse(r.seq.begin(), r.seq.end());
        out.rows.push_back(std::move(r));
    }
    for (Label j = 1; j <= l - 2; ++j) {
        Row r{complete_seq(l - 1 + j, 2 * l - 1, x, y), l - 1 + j, in_b(1 - 2 * j), false};
        if (r.reversed) std::reverse(r.seq.begin(), r.seq.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

Build build_case3b(int l, int t) {
    if (l < 2 || t < l || 4 * t > 5 * l)
        throw Error(ErrorCode::BadParams, "construct_case3b: need 2 <= l <= t <= 5l/4");
    if (l == 2 && t == 2) return from_table("case3b_l2_t2");
    if (l == 3 && t == 3) return from_table("case3b_l3_t3");
    Label x = 8LL * l * l - 10 * l + 2 + 1;
    Label y = 8LL * l * l - 6 * l + 1;
    Label delta = -4LL * l * l - 2 * t + 4LL * l * t + 1;
    std::vector<Label> B;
    if (t == l) {
        B = {-(2LL * l - 3), -3, 1}; // l != 2,3 here, so the three are distinct
    } else {
        bool ok = false;
        if (delta >= 0 && delta <= (Label)(l - 1) * (l - 1) &&
            delta != 2 && delta != (Label)(l - 1) * (l - 1) - 2) {
            B = odd_subset_with_sum(l - 1, delta).chosen;
            ok = true;
        }
        if (!ok) {
            // mixed-sign fallback over both difference sets, split path excluded
            std::vector<Label> avail;
            for (int j = 1; j <= l - 1; ++j) avail.push_back(2 * l - 1 - 2 * j); // T_j
            for (int i = 1; i <= l - 1; ++i) avail.push_back(1 - 2 * i);         // R_i
            auto found = signed_subset_with_sum(avail, delta);
            if (!found)
                throw Error(ErrorCode::ConstructionBug, "construct_case3b: no correction subset");
            B = *found;
        }
    }
    auto in_b = [&](Label v) { return std::find(B.begin(), B.end(), v) != B.end(); };
    Build out;
    out.delta = delta;
    out.correction_set = B;
    push_split(out, complete_seq(4 * l - 2, 2 * l - 2, x, y), 4 * l - 2, 4 * l - 2 - 2 * t);
    for (Label i = 1; i <= l - 1; ++i) {
        Row r{complete_seq(3 * l - 2 + i, 2 * l - 2, x, y), 3 * l - 2 + i, in_b(1 - 2 * i), false};
        if (r.reversed) std::reverse(r.seq.begin(), r.seq.end());
        out.rows.push_back(std::move(r));
    }
    for (Label j = 1; j <= l - 1; ++j) {
        Row r{complete_seq(j, 2 * l - 1, x, y), j, in_b(2 * l - 1 - 2 * j), false};
        if (r.reversed) std::reverse(r.seq.begin(), r.seq.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

Build build_case4(int s, int t) {
    if (s < 4) throw Error(ErrorCode::BadParams, "construct_case4: need s >= 4");
    {
        int k = s / 4, lo, hi;
        switch (s % 4) {
        case 0: lo = k; hi = 3 * k - 1; break;
        case 1: lo = k; hi = 3 * k; break;
        case 2: lo = k + 1; hi = 3 * k; break;
        default: lo = k + 1; hi = 3 * k + 1; break;
        }
        if (t < lo || t > hi)
            throw Error(ErrorCode::BadParams, "construct_case4: t outside the family range");
    }
    if (s == 5 && t == 2) return from_table("case4_s5_t2");
    if (s == 7 && t == 3) return from_table("case4_s7_t3");

    Label g = 2LL * s - 3;
    Label x = g * g;
    Label y = g * (2 * s - 2);
    Label psum = (s - 1) * g; // u-end of P unreversed (= y/2)

    // assemble the split block complete(a), P, and the R blocks on the
    // remaining residue pairs (skipping the pair {a, g-a}), reversed per B
    auto assemble = [&](Label a, int first_len, bool rev1, bool rev2, bool revP,
                        const std::vector<Label>& B, Label delta) {
        Build out;
        out.delta = delta;
        out.correction_set = B;
        push_split(out, complete_seq(a, 2 * s - 3, x, y), a, first_len, rev1, rev2);
        Row p{complete_seq(psum, s - 2, x, y), psum, revP, false};
        if (revP) std::reverse(p.seq.begin(), p.seq.end());
        out.rows.push_back(std::move(p));
        Label skip_j = std::min(a, g - a);
        for (Label j = 1; j <= s - 2; ++j) {
            if (j == skip_j) continue;
            bool rev = std::find(B.begin(), B.end(), g - 2 * j) != B.end();
            Row r{complete_seq(j, 2 * s - 3, x, y), j, rev, false};
            if (rev) std::reverse(r.seq.begin(), r.seq.end());
            out.rows.push_back(std::move(r));
        }
        return out;
    };

    // front-split recipe on residue pair {1, g-1}: alpha = 1 keeps u-end 1,
    // alpha = 2s-4 uses the reversed block complete(g-1)
    auto attempt = [&](Label alpha, Label delta) -> std::optional<Build> {
        long long n = s - 3;
        if (n < 1 || delta < 0 || delta > n * n || delta == 2 || delta == n * n - 2)
            return std::nullopt;
        auto sel = odd_subset_with_sum(n, delta);
        return assemble(alpha == 1 ? 1 : g - 1, 2 * t, false, false, false,
                        sel.chosen, delta);
    };

    auto alpha_scan = [&](Label alpha) -> std::optional<Build> {
        Label delta = g * (s - 1 - t) - (Label(s) * s - 3 * s + 2) / 2 - alpha;
        if (delta < 0) return std::nullopt;
        std::vector<Label> gains;
        for (Label j = 1; j <= s - 2; ++j)
            if (j != alpha) gains.push_back(g - 2 * j);
        auto B = signed_subset_with_sum(gains, delta);
        if (!B) return std::nullopt;
        return assemble(alpha, 2 * t, false, false, false, *B, delta);
    };

    if (s == 13 && t == 9) {
        auto b = alpha_scan(3);
        if (!b) throw Error(ErrorCode::ConstructionBug, "construct_case4: (13,9) failed");
        return *b;
    }
    Label d1 = (3LL * s * s - 7 * s - 4LL * s * t + 6 * t + 2) / 2;
    if (auto b = attempt(1, d1)) return *b;
    Label ds = (3LL * s * s - 15 * s - 4LL * s * t + 6 * t + 22) / 2;
    if (auto b = attempt(2 * s - 4, ds)) return *b;
    for (Label alpha = 2; alpha <= s - 2; ++alpha)
        if (auto b = alpha_scan(alpha)) return *b;

    // last resort: exhaust split residue pair, split side and orientations;
    // the remainder is a subset-sum over whole-path reversals
    for (Label a = 1; a <= s - 2; ++a) {
        auto T = complete_seq(a, 2 * s - 3, x, y);
        Label base_r = 0;
        std::vector<Label> gains;
        for (Label j = 1; j <= s - 2; ++j)
            if (j != a) {
                base_r += j;
                gains.push_back(g - 2 * j);
            }
        for (int side = 0; side < 2; ++side) {
            int first_len = side == 0 ? 2 * t : 4 * s - 6 - 2 * t;
            for (int rev1 = 0; rev1 < 2; ++rev1) {
                Label e1 = rev1 ? T[first_len - 1] : T[0];
                for (int rev2 = 0; rev2 < 2; ++rev2) {
                    Label e2 = rev2 ? T.back() : T[first_len];
                    for (int revP = 0; revP < 2; ++revP) {
                        Label eP = revP ? g : psum;
                        Label delta = y - (e1 + e2 + eP + base_r);
                        auto B = signed_subset_with_sum(gains, delta);
                        if (B)
                            return assemble(a, first_len, rev1, rev2, revP, *B, delta);
                    }
                }
            }
        }
    }
    throw Error(ErrorCode::ConstructionBug, "construct_case4: all recipes failed for s=" +
                                                std::to_string(s) + " t=" + std::to_string(t));
}

EdgeLabeling finalize(const ThetaGraph& g, Build&& b, ConstructionTrace* trace) {
    if (b.rows.size() != static_cast<size_t>(g.path_count()))
        throw Error(ErrorCode::WrongShape, "constructor: path count mismatch");
    std::stable_sort(b.rows.begin(), b.rows.end(), [](const Row& a, const Row& c) {
        return a.seq.size() < c.seq.size();
    });
    EdgeLabeling f;
    for (size_t i = 0; i < b.rows.size(); ++i) {
        if (static_cast<int>(b.rows[i].seq.size()) != g.lengths()[i])
            throw Error(ErrorCode::WrongShape,
                        "constructor: built lengths do not match " + to_string(g));
        f.per_path.push_back(b.rows[i].seq);
    }
    if (trace) {
        for (const Row& r : b.rows)
            trace->path_specs.push_back(
                {static_cast<int>(r.seq.size()), r.alpha1, r.reversed, r.from_split});
        trace->split = b.split;
        trace->delta = b.delta;
        trace->correction_set = b.correction_set;
        trace->exception_table_id = b.table_id;
        for (const auto& seq : f.per_path) trace->u_end_labels.push_back(seq.front());
    }
    return f;
}

Build dispatch(const FamilyMatch& fm) {
    switch (fm.family) {
    case Family::K2S: return build_k2s(fm.params.s);
    case Family::F1: return build_case1(fm.params.l);
    case Family::F2A: return build_case2a(fm.params.l);
    case Family::F2B:
        if (fm.params.s == 5) return from_table("case2b_s5");
        if (fm.params.s == 8) return from_table("case2b_s8");
        return from_table("case2b_s11");
    case Family::F3A: return build_case3a(fm.params.l, fm.params.t);
    case Family::F3B: return build_case3b(fm.params.l, fm.params.t);
    default: return build_case4(fm.params.s, fm.params.t);
    }
}

EdgeLabeling build_checked(const ThetaGraph& g, const FamilyMatch& fm,
                           const TwoColorTargets& tg, ConstructionTrace* trace) {
    Build b = dispatch(fm);
    EdgeLabeling f = finalize(g, std::move(b), trace);
    auto report = verify(g, f, std::make_pair(tg.x, tg.y));
    if (!report.valid_two_coloring() || !report.matches_targets.value_or(false))
        throw Error(ErrorCode::ConstructionBug,
                    "constructor: self-verification failed for " + to_string(g));
    return f;
}

} // namespace

ConstructResult construct(const ThetaGraph& g) {
    ConstructResult res;
    res.classification = classify_family(g);
    if (!res.classification.two_chromatic()) return res;
    Construction c;
    c.trace.family = *res.classification.primary;
    c.trace.targets = *res.classification.targets;
    c.labeling = build_checked(g, c.trace.family, c.trace.targets, &c.trace);
    res.construction = std::move(c);
    return res;
}

namespace {

EdgeLabeling by_params(Family fam, FamilyParams params) {
    std::vector<int> lengths;
    switch (fam) {
    case Family::K2S:
        lengths.assign(params.s, 2);
        break;
    case Family::F1:
        lengths.assign(3 * params.l + 2, 4 * params.l);
        lengths.insert(lengths.end(), params.l, 4 * params.l + 2);
        break;
    case Family::F2A:
        lengths.assign(1, 2 * params.l - 2);
        lengths.insert(lengths.end(), 3 * params.l - 1, 4 * params.l - 2);
        break;
    case Family::F3A:
        lengths = {4 * params.l - 2 - 2 * params.t, 2 * params.t};
        lengths.insert(lengths.end(), params.l, 4 * params.l - 4);
        lengths.insert(lengths.end(), params.l - 2, 4 * params.l - 2);
        break;
    case Family::F3B:
        lengths = {4 * params.l - 2 - 2 * params.t, 2 * params.t - 2};
        lengths.insert(lengths.end(), params.l - 1, 4 * params.l - 4);
        lengths.insert(lengths.end(), params.l - 1, 4 * params.l - 2);
        break;
    default:
        lengths = {2 * params.t, 4 * params.s - 6 - 2 * params.t, 2 * params.s - 4};
        lengths.insert(lengths.end(), params.s - 3, 4 * params.s - 6);
        break;
    }
    ThetaGraph g = make_theta(std::move(lengths));
    auto tg = two_color_targets(g);
    if (!tg) throw Error(ErrorCode::BadParams, "constructor: targets not integral");
    return build_checked(g, {fam, params}, *tg, nullptr);
}

} // namespace

EdgeLabeling construct_case1(int l) { return by_params(Family::F1, {4 * l + 2, l, -1}); }
EdgeLabeling construct_case2a(int l) { return by_params(Family::F2A, {3 * l, l, -1}); }

EdgeLabeling construct_case2b(const ThetaGraph& g) {
    for (const auto& id : {"case2b_s5", "case2b_s8", "case2b_s11"}) {
        const ExceptionTable* t = find_exception_table(id);
        if (t && t->lengths == g.lengths()) {
            auto tg = two_color_targets(g);
            return build_checked(g, {Family::F2B, {g.path_count(), -1, -1}}, *tg, nullptr);
        }
    }
    throw Error(ErrorCode::WrongShape, "construct_case2b: not one of the three fixed graphs");
}

EdgeLabeling construct_case3a(int l, int t) { return by_params(Family::F3A, {2 * l, l, t}); }
EdgeLabeling construct_case3b(int l, int t) { return by_params(Family::F3B, {2 * l, l, t}); }
EdgeLabeling construct_case4(int s, int t) { return by_params(Family::F4, {s, -1, t}); }
EdgeLabeling construct_k2s(int s) { return by_params(Family::K2S, {s, -1, -1}); }

std::string trace_to_json(const ConstructionTrace& t) {
    nlohmann::ordered_json j;
    j["family"] = to_string(t.family.family);
    j["x"] = t.targets.x;
    j["y"] = t.targets.y;
    j["B"] = t.correction_set;
    if (t.split) {
        j["gamma1"] = t.split->gamma1;
        j["gamma2"] = t.split->gamma2;
    } else {
        j["gamma1"] = nullptr;
        j["gamma2"] = nullptr;
    }
    if (t.exception_table_id)
        j["exception_table"] = *t.exception_table_id;
    else
        j["exception_table"] = nullptr;
    return j.dump();
}

} // namespace theta
