#include "theta/theta_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace theta {

ThetaGraph make_theta(std::vector<int> lengths) {
    if (lengths.empty())
        throw Error(ErrorCode::EmptyInput, "make_theta: empty length list");
    for (int a : lengths)
        if (a <= 0)
            throw Error(ErrorCode::EmptyInput, "make_theta: lengths must be positive");
    std::sort(lengths.begin(), lengths.end());
    long long m = std::accumulate(lengths.begin(), lengths.end(), 0LL);
    long long s = static_cast<long long>(lengths.size());
    // order check first: theta(1,1) reports TooSmall, not MultiEdge
    if (s < 2 || m - s + 2 < 3)
        throw Error(ErrorCode::TooSmall, "make_theta: order < 3");
    if (s >= 2 && lengths[1] == 1)
        throw Error(ErrorCode::MultiEdge, "make_theta: two paths of length 1");
    ThetaGraph g;
    g.lengths_ = std::move(lengths);
    g.m_ = m;
    return g;
}

std::string to_string(const ThetaGraph& g) {
    std::ostringstream os;
    os << "theta(";
    const auto& ls = g.lengths();
    for (size_t i = 0; i < ls.size();) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        if (i) os << ",";
        os << ls[i];
        if (j - i > 1) os << "^[" << (j - i) << "]";
        i = j;
    }
    os << ")";
    return os.str();
}

std::string to_string(const VertexRef& v) {
    switch (v.kind) {
    case VertexRef::Kind::U: return "u";
    case VertexRef::Kind::V: return "v";
    default: break;
    }
    return "p" + std::to_string(v.path) + "_" + std::to_string(v.pos);
}

void EdgeLabeling::reverse_path(int i) {
    std::reverse(per_path.at(i).begin(), per_path.at(i).end());
}

Label InducedColoring::color_of(const VertexRef& ref) const {
    switch (ref.kind) {
    case VertexRef::Kind::U: return u;
    case VertexRef::Kind::V: return v;
    default: return internal.at(ref.path).at(ref.pos - 1);
    }
}

InducedColoring induced_coloring(const ThetaGraph& g, const EdgeLabeling& f) {
    const auto& ls = g.lengths();
    if (f.per_path.size() != ls.size())
        throw Error(ErrorCode::ShapeMismatch, "induced_coloring: path count mismatch");
    for (size_t i = 0; i < ls.size(); ++i)
        if (static_cast<int>(f.per_path[i].size()) != ls[i])
            throw Error(ErrorCode::ShapeMismatch, "induced_coloring: sequence length mismatch");

    InducedColoring c;
    c.internal.resize(ls.size());
    for (size_t i = 0; i < ls.size(); ++i) {
        const auto& seq = f.per_path[i];
        c.u += seq.front();
        c.v += seq.back();
        c.internal[i].reserve(seq.size() - 1);
        for (size_t p = 0; p + 1 < seq.size(); ++p)
            c.internal[i].push_back(seq[p] + seq[p + 1]);
    }
    c.palette.insert(c.u);
    c.palette.insert(c.v);
    for (const auto& row : c.internal)
        for (Label col : row) c.palette.insert(col);
    c.count = static_cast<int>(c.palette.size());
    return c;
}

std::string labeling_to_json(const ThetaGraph& g, const EdgeLabeling& f) {
    nlohmann::ordered_json j;
    j["lengths"] = g.lengths();
    j["paths"] = f.per_path;
    return j.dump();
}

std::pair<ThetaGraph, EdgeLabeling> labeling_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto lengths = j.at("lengths").get<std::vector<int>>();
    EdgeLabeling f;
    f.per_path = j.at("paths").get<std::vector<std::vector<Label>>>();
    return {make_theta(std::move(lengths)), std::move(f)};
}

std::string to_dot(const ThetaGraph& g, const EdgeLabeling* f) {
    std::ostringstream os;
    os << "graph theta {\n";
    os << "  u; v;\n";
    const auto& ls = g.lengths();
    for (size_t i = 0; i < ls.size(); ++i) {
        std::string prev = "u";
        for (int k = 1; k <= ls[i]; ++k) {
            std::string next =
                (k == ls[i]) ? "v" : "p" + std::to_string(i) + "_" + std::to_string(k);
            os << "  " << prev << " -- " << next;
            if (f) os << " [label=" << f->per_path[i][k - 1] << "]";
            os << ";\n";
            prev = next;
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace theta
