#include "theta/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace theta {

VerificationReport verify(const ThetaGraph& g, const EdgeLabeling& f,
                          std::optional<std::pair<Label, Label>> expected) {
    const auto& ls = g.lengths();
    if (f.per_path.size() != ls.size())
        throw Error(ErrorCode::ShapeMismatch, "verify: path count mismatch");
    for (size_t i = 0; i < ls.size(); ++i)
        if (static_cast<int>(f.per_path[i].size()) != ls[i])
            throw Error(ErrorCode::ShapeMismatch, "verify: sequence length mismatch");

    VerificationReport r;
    long long m = g.size();

    // bijection onto [1,m]
    std::map<Label, int> seen;
    for (const auto& seq : f.per_path)
        for (Label v : seq) ++seen[v];
    for (const auto& [v, cnt] : seen) {
        if (v < 1 || v > m || cnt > 1) r.duplicates.push_back(v);
    }
    for (Label v = 1; v <= m; ++v)
        if (!seen.count(v)) r.missing.push_back(v);
    r.is_bijection = r.missing.empty() && r.duplicates.empty();

    // induced colors, recomputed from the raw sequences
    Label cu = 0, cv = 0;
    for (const auto& seq : f.per_path) {
        cu += seq.front();
        cv += seq.back();
    }
    std::set<Label> palette{cu, cv};

    auto check = [&](const VertexRef& a, const VertexRef& b, Label ca, Label cb) {
        if (ca == cb) r.violations.push_back({a, b, ca});
    };

    for (size_t i = 0; i < ls.size(); ++i) {
        const auto& seq = f.per_path[i];
        int n = static_cast<int>(seq.size());
        if (n == 1) {
            check(VertexRef::u(), VertexRef::v(), cu, cv);
            continue;
        }
        std::vector<Label> in(n - 1);
        for (int p = 0; p + 1 < n; ++p) {
            in[p] = seq[p] + seq[p + 1];
            palette.insert(in[p]);
        }
        int pi = static_cast<int>(i);
        check(VertexRef::u(), VertexRef::internal(pi, 1), cu, in[0]);
        for (int p = 1; p + 1 < n; ++p)
            check(VertexRef::internal(pi, p), VertexRef::internal(pi, p + 1), in[p - 1], in[p]);
        check(VertexRef::internal(pi, n - 1), VertexRef::v(), in[n - 2], cv);
    }
    r.is_local_antimagic = r.violations.empty();
    r.palette.assign(palette.begin(), palette.end());
    r.color_count = static_cast<int>(r.palette.size());
    if (expected) {
        auto [x, y] = *expected;
        std::set<Label> want{x, y};
        r.matches_targets = (palette == want);
    }
    return r;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["is_bijection"] = r.is_bijection;
    j["missing"] = r.missing;
    j["duplicates"] = r.duplicates;
    j["is_local_antimagic"] = r.is_local_antimagic;
    nlohmann::ordered_json viols = nlohmann::ordered_json::array();
    for (const auto& v : r.violations)
        viols.push_back({{"a", to_string(v.a)}, {"b", to_string(v.b)}, {"color", v.color}});
    j["violations"] = viols;
    j["palette"] = r.palette;
    j["color_count"] = r.color_count;
    if (r.matches_targets)
        j["matches_targets"] = *r.matches_targets;
    else
        j["matches_targets"] = nullptr;
    return j.dump();
}

} // namespace theta
