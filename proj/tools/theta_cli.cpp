// Command-line surface: classify / construct / verify / decide2 / cross-check /
// atlas / subset. Exit codes: 0 success or valid, 1 invalid labeling, 2 usage
// error, 3 NotTwo or no witness. The verify subcommand maps to 0 valid with 2
// colors, 1 valid with another color count, 2 invalid.
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "theta/constructor.hpp"
#include "theta/search_engine.hpp"
#include "theta/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// accepts "2,6,6,6,6,6", compact "6^5,2" and "6^[5],2"
std::vector<int> parse_lengths(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw theta::Error(theta::ErrorCode::EmptyInput, "empty length item");
        size_t caret = item.find('^');
        if (caret == std::string::npos) {
            out.push_back(std::stoi(item));
            continue;
        }
        int value = std::stoi(item.substr(0, caret));
        std::string rep = item.substr(caret + 1);
        if (!rep.empty() && rep.front() == '[') rep = rep.substr(1, rep.size() - 2);
        int count = std::stoi(rep);
        for (int i = 0; i < count; ++i) out.push_back(value);
    }
    return out;
}

std::string lengths_compact(const std::vector<int>& ls) {
    std::ostringstream os;
    for (size_t i = 0; i < ls.size(); ++i) {
        if (i) os << ",";
        os << ls[i];
    }
    return os.str();
}

ordered_json labeling_json(const theta::ThetaGraph& g, const theta::EdgeLabeling& f) {
    return ordered_json::parse(theta::labeling_to_json(g, f));
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream os(p);
    if (!os) throw theta::Error(theta::ErrorCode::OutOfRange, "cannot write " + p.string());
    os << text;
}

int cmd_classify(const std::string& lengths) {
    theta::ThetaGraph g = theta::make_theta(parse_lengths(lengths));
    auto c = theta::classify_family(g);
    std::cout << theta::classification_to_json(c) << "\n";
    return c.two_chromatic() ? 0 : 3;
}

int cmd_construct(const std::string& lengths, bool do_verify, const std::string& format,
                  const std::string& out_path) {
    theta::ThetaGraph g = theta::make_theta(parse_lengths(lengths));
    auto res = theta::construct(g);
    if (!res.construction) {
        std::cout << theta::classification_to_json(res.classification) << "\n";
        return 3;
    }
    const auto& c = *res.construction;
    std::string payload;
    if (format == "dot") {
        payload = theta::to_dot(g, &c.labeling);
    } else {
        ordered_json j;
        j["labeling"] = labeling_json(g, c.labeling);
        j["trace"] = ordered_json::parse(theta::trace_to_json(c.trace));
        if (do_verify) {
            auto report =
                theta::verify(g, c.labeling, std::make_pair(c.trace.targets.x, c.trace.targets.y));
            j["verification"] = ordered_json::parse(theta::report_to_json(report));
        }
        payload = j.dump(2) + "\n";
    }
    if (out_path.empty())
        std::cout << payload;
    else
        write_file(out_path, payload);
    return 0;
}

int cmd_verify(const std::string& file, std::optional<std::pair<long long, long long>> expected) {
    std::ifstream is(file);
    if (!is) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << is.rdbuf();
    auto parsed = nlohmann::json::parse(buf.str());
    // accept both a bare labeling object and the construct output wrapper
    std::string text = parsed.contains("labeling") ? parsed["labeling"].dump() : buf.str();
    auto [g, f] = theta::labeling_from_json(text);
    auto report = theta::verify(g, f, expected);
    std::cout << theta::report_to_json(report) << "\n";
    if (!report.valid()) return 2;
    if (report.color_count != 2) return 1;
    if (expected && !report.matches_targets.value_or(false)) return 1;
    return 0;
}

int cmd_decide2(const std::string& lengths, bool no_pruning) {
    theta::ThetaGraph g = theta::make_theta(parse_lengths(lengths));
    theta::SearchOptions opts;
    opts.enable_pruning = !no_pruning;
    auto res = theta::exists_two_coloring(g, opts);
    ordered_json j;
    j["verdict"] = res.found() ? "yes" : "no";
    if (res.found())
        j["witness"] = labeling_json(g, *res.witness);
    else
        j["witness"] = nullptr;
    std::cout << j.dump() << "\n";
    return res.found() ? 0 : 3;
}

int cmd_cross_check(long long max_m) {
    auto rep = theta::cross_check(max_m);
    for (const auto& row : rep.rows) {
        std::cout << (row.agree ? "pass" : "FAIL") << "  theta(" << lengths_compact(row.lengths)
                  << ")  family=" << (row.family_member ? "yes" : "no")
                  << " search=" << (row.search_witness ? "yes" : "no");
        if (row.brute_min_colors) std::cout << " brute_chi_la=" << *row.brute_min_colors;
        std::cout << "\n";
    }
    std::cout << (rep.all_agree ? "all agree" : "DISAGREEMENT FOUND") << " (" << rep.rows.size()
              << " graphs)\n";
    return rep.all_agree ? 0 : 1;
}

int cmd_subset(long long n, long long delta) {
    auto sel = theta::odd_subset_with_sum(n, delta);
    ordered_json j;
    j["n"] = sel.n;
    j["delta"] = sel.delta;
    j["B"] = sel.chosen;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_atlas(long long max_size, const std::string& out_dir) {
    auto members = theta::enumerate_family_members(max_size);
    fs::create_directories(out_dir);

    struct Item {
        theta::ThetaGraph g;
        theta::FamilyClassification cls;
        std::string json;
        std::string csv;
        std::string file;
    };
    std::vector<Item> items;
    items.reserve(members.size());
    for (auto& [g, cls] : members) items.push_back({g, cls, "", "", ""});

    int threads = 1;
    if (const char* env = std::getenv("THETA_ATLAS_THREADS"))
        threads = std::max(1, std::atoi(env));
    threads = std::min<int>(threads, std::max<size_t>(items.size(), 1));

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        for (size_t i = next++; i < items.size(); i = next++) {
            Item& it = items[i];
            auto res = theta::construct(it.g);
            if (!res.construction) {
                failed = true;
                continue;
            }
            const auto& c = *res.construction;
            auto report = theta::verify(it.g, c.labeling,
                                        std::make_pair(c.trace.targets.x, c.trace.targets.y));
            std::string status = report.valid_two_coloring() && report.matches_targets.value_or(false)
                                     ? "valid-2-colors"
                                     : "INVALID";
            if (status != "valid-2-colors") failed = true;

            std::string name = "theta";
            const auto& ls = it.g.lengths();
            for (size_t k = 0; k < ls.size();) {
                size_t e = k;
                while (e < ls.size() && ls[e] == ls[k]) ++e;
                name += "_" + std::to_string(ls[k]);
                if (e - k > 1) name += "x" + std::to_string(e - k);
                k = e;
            }
            it.file = name + ".json";

            ordered_json j;
            j["lengths"] = it.g.lengths();
            j["s"] = it.g.path_count();
            j["m"] = it.g.size();
            j["family"] = theta::to_string(it.cls.primary->family);
            ordered_json params;
            params["s"] = it.cls.primary->params.s;
            if (it.cls.primary->params.l >= 0) params["l"] = it.cls.primary->params.l;
            if (it.cls.primary->params.t >= 0) params["t"] = it.cls.primary->params.t;
            j["params"] = params;
            j["x"] = it.cls.targets->x;
            j["y"] = it.cls.targets->y;
            j["labeling_file"] = it.file;
            j["status"] = status;
            j["labeling"] = labeling_json(it.g, c.labeling);
            j["trace"] = ordered_json::parse(theta::trace_to_json(c.trace));
            it.json = j.dump(2) + "\n";

            const auto& p = it.cls.primary->params;
            std::ostringstream csv;
            csv << lengths_compact(it.g.lengths()) << ";" << it.g.path_count() << ";"
                << it.g.size() << ";" << theta::to_string(it.cls.primary->family) << ";";
            if (p.l >= 0) csv << p.l;
            csv << ";";
            if (p.t >= 0) csv << p.t;
            csv << ";" << it.cls.targets->x << ";" << it.cls.targets->y << ";" << status;
            it.csv = csv.str();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ofstream index(fs::path(out_dir) / "index.csv");
    index << "lengths;s;m;family;l;t;x;y;status\n";
    for (const Item& it : items) {
        write_file(fs::path(out_dir) / it.file, it.json);
        index << it.csv << "\n";
    }
    std::cout << "atlas: " << items.size() << " records -> " << out_dir << "\n";
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local antimagic 2-colorings of s-bridge (theta) graphs"};
    app.require_subcommand(1);

    std::string lengths, format = "json", out_path, file;
    bool do_verify = false, no_pruning = false;
    long long max_m = 14, n = 0, delta = 0, max_size = 8;
    std::string out_dir = "atlas";
    long long ex = -1, ey = -1;

    auto* c_classify = app.add_subcommand("classify", "family classification for a length list");
    c_classify->add_option("lengths", lengths)->required();

    auto* c_construct = app.add_subcommand("construct", "build a 2-color certificate labeling");
    c_construct->add_option("lengths", lengths)->required();
    c_construct->add_flag("--verify", do_verify, "embed a verification report");
    c_construct->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    c_construct->add_option("--out", out_path, "write to file instead of stdout");

    auto* c_verify = app.add_subcommand("verify", "check a labeling file");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--expect-x", ex);
    c_verify->add_option("--expect-y", ey);

    auto* c_decide = app.add_subcommand("decide2", "exact search for a 2-color labeling");
    c_decide->add_option("lengths", lengths)->required();
    c_decide->add_flag("--no-pruning", no_pruning);

    auto* c_cross = app.add_subcommand("cross-check", "search vs classifier vs brute force");
    c_cross->add_option("--max-m", max_m);

    auto* c_subset = app.add_subcommand("subset", "odd subset with prescribed sum");
    c_subset->add_option("--n", n)->required();
    c_subset->add_option("--delta", delta)->required();

    auto* c_atlas = app.add_subcommand("atlas", "emit all family members up to a size");
    c_atlas->add_option("--max-size", max_size)->required();
    c_atlas->add_option("--out", out_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return cmd_classify(lengths);
        if (c_construct->parsed()) return cmd_construct(lengths, do_verify, format, out_path);
        if (c_verify->parsed()) {
            std::optional<std::pair<long long, long long>> expected;
            if (ex >= 0 && ey >= 0) expected = {ex, ey};
            return cmd_verify(file, expected);
        }
        if (c_decide->parsed()) return cmd_decide2(lengths, no_pruning);
        if (c_cross->parsed()) return cmd_cross_check(max_m);
        if (c_subset->parsed()) return cmd_subset(n, delta);
        if (c_atlas->parsed()) return cmd_atlas(max_size, out_dir);
    } catch (const theta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
