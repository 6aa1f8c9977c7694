#include "rvx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rvx/graph.hpp"
#include "rvx/harness.hpp"
#include "rvx/rainbow.hpp"
#include "rvx/steiner.hpp"

using nlohmann::json;

namespace rvx {

namespace {

struct InputFlags {
    std::string g6;
    std::string file;
    std::string family;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    auto* a = cmd->add_option("--g6", in.g6, "graph6 string");
    auto* b = cmd->add_option("--file", in.file, "file of graph6 lines, or - for stdin");
    auto* c = cmd->add_option("--family", in.family, "family spec, e.g. rose:2,3");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

std::vector<Graph> load_inputs(const InputFlags& in, std::string& source, std::string& value) {
    std::vector<Graph> graphs;
    if (!in.g6.empty()) {
        source = "g6";
        value = in.g6;
        graphs.push_back(parse_graph6(in.g6));
    } else if (!in.file.empty()) {
        source = "file";
        value = in.file;
        std::ifstream fin;
        std::istream* sp = &std::cin;
        if (in.file != "-") {
            fin.open(in.file);
            if (!fin) throw std::invalid_argument("cannot read file '" + in.file + "'");
            sp = &fin;
        }
        std::string line;
        while (std::getline(*sp, line)) {
            if (line.empty() || line[0] == '>') continue;
            graphs.push_back(parse_graph6(line));
        }
        if (graphs.empty()) throw std::invalid_argument("no graphs in input '" + in.file + "'");
    } else if (!in.family.empty()) {
        source = "family";
        value = in.family;
        graphs.push_back(make_family_spec(in.family));
    } else {
        throw std::invalid_argument("one of --g6, --file, --family is required");
    }
    return graphs;
}

json claim_report_json(const ClaimReport& report) {
    json arr = json::array();
    for (const auto& inst : report.instances) {
        json j = {{"id", report.id},
                  {"params", inst.params},
                  {"expected", inst.expected},
                  {"computed", inst.computed},
                  {"status", inst.status}};
        if (inst.counterexample)
            j["counterexample"] = {{"g6", inst.counterexample->g6},
                                   {"k", inst.counterexample->k},
                                   {"computed", inst.counterexample->computed}};
        arr.push_back(j);
    }
    return arr;
}

void print_claims_text(std::ostream& out, const ClaimReport& report) {
    out << "suite " << report.id << ":\n";
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    for (const auto& inst : report.instances) {
        out << "  [" << inst.status << "] " << inst.params << " | expected " << inst.expected
            << " | computed " << inst.computed;
        if (inst.counterexample)
            out << " | counterexample g6=" << inst.counterexample->g6
                << " k=" << inst.counterexample->k;
        out << "\n";
    }
}

void emit(std::ostream& out, const std::string& format, const json& doc,
          const std::function<void(std::ostream&)>& text,
          const std::function<void(std::ostream&)>& csv) {
    if (format == "json")
        out << doc.dump(2) << "\n";
    else if (format == "csv")
        csv(out);
    else
        text(out);
}

std::string witness_tree_str(const WitnessTree& t) {
    std::ostringstream s;
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        s << (i ? " " : "") << t.edges[i].first << "-" << t.edges[i].second;
    return s.str();
}

std::string subset_str(Bits s) {
    std::ostringstream os;
    auto verts = bits_to_list(s);
    for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? "," : "") << verts[i];
    return os.str();
}

int run_claim_suites(const std::vector<ClaimReport>& reports, const std::string& format,
                     bool strict, const std::string& suite, std::ostream& out) {
    json claims = json::array();
    int confirmed = 0, refuted = 0, skipped = 0;
    bool reverify_failure = false;
    for (const auto& r : reports) {
        for (const auto& j : claim_report_json(r)) claims.push_back(j);
        confirmed += r.count("confirmed");
        refuted += r.count("refuted");
        skipped += r.count("skipped");
        for (const auto& inst : r.instances)
            if (inst.status == "refuted" && inst.counterexample &&
                inst.counterexample->computed >= 0 && !reverify(*inst.counterexample))
                reverify_failure = true;
    }
    json doc = {{"command", "claims"},
                {"input", nullptr},
                {"params", {{"suite", suite}, {"strict", strict}}},
                {"result",
                 {{"confirmed", confirmed},
                  {"refuted", refuted},
                  {"skipped", skipped},
                  {"counterexamples_reverified", !reverify_failure}}},
                {"stats", json::object()},
                {"claims", claims}};
    emit(
        out, format, doc,
        [&](std::ostream& o) {
            for (const auto& r : reports) print_claims_text(o, r);
            o << "totals: " << confirmed << " confirmed, " << refuted << " refuted, " << skipped
              << " skipped\n";
            if (reverify_failure) o << "ERROR: a counterexample failed to re-verify\n";
        },
        [&](std::ostream& o) {
            o << "id,params,expected,computed,status\n";
            for (const auto& r : reports)
                for (const auto& inst : r.instances)
                    o << r.id << ",\"" << inst.params << "\",\"" << inst.expected << "\",\""
                      << inst.computed << "\"," << inst.status << "\n";
        });
    if (reverify_failure) return 1;
    if (strict && refuted > 0) return 2;
    return 0;
}

std::string default_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("RVX_CACHE");
    return env ? env : "";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact k-vertex-rainbow index toolkit"};
    app.require_subcommand(1);
    std::string format = "text";

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "exact rvx_k of a graph");
    InputFlags compute_in;
    add_input_flags(compute, compute_in);
    int compute_k = 3;
    int max_colors = -1;
    std::string compute_cache;
    bool certificates = false;
    compute->add_option("--k", compute_k, "subset size k")->required();
    compute->add_option("--max-colors", max_colors, "stop after this many colors");
    compute->add_option("--cache", compute_cache, "result cache path (default $RVX_CACHE)");
    compute->add_option("--format", format, "text|json|csv");
    compute->add_flag("--certificates", certificates, "emit per-subset witness trees");

    // ---- sdiam ----
    auto* sdiam_cmd = app.add_subcommand("sdiam", "Steiner k-diameter");
    InputFlags sdiam_in;
    add_input_flags(sdiam_cmd, sdiam_in);
    int sdiam_k = 3;
    sdiam_cmd->add_option("--k", sdiam_k, "subset size k")->required();
    sdiam_cmd->add_option("--format", format, "text|json|csv");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check a k-vertex-rainbow coloring");
    InputFlags verify_in;
    add_input_flags(verify, verify_in);
    int verify_k = 3;
    std::string colors_csv;
    verify->add_option("--k", verify_k, "subset size k")->required();
    verify->add_option("--colors", colors_csv, "comma-separated color ids by vertex")->required();
    verify->add_option("--format", format, "text|json|csv");

    // ---- family ----
    auto* family = app.add_subcommand("family", "emit a named family graph");
    std::string family_spec, emit_format = "g6";
    family->add_option("spec", family_spec, "e.g. theorem3:9,2")->required();
    family->add_option("--emit", emit_format, "g6|edges");
    family->add_option("--format", format, "text|json");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "exhaustive sweeps");
    sweep->require_subcommand(1);
    auto* ng = sweep->add_subcommand("ng", "Nordhaus-Gaddum sum of rvx_3 over complement pairs");
    auto* ts = sweep->add_subcommand("tsearch", "minimal size t(n,k,ell)");
    int sweep_n = 5, sweep_k = 3, sweep_ell = 2, jobs = 1;
    std::string sweep_input, sweep_cache;
    for (auto* cmd : {ng, ts}) {
        cmd->add_option("--n", sweep_n, "graph order")->required();
        cmd->add_option("--jobs", jobs, "worker pool bound")->check(CLI::PositiveNumber);
        cmd->add_option("--cache", sweep_cache, "result cache path (default $RVX_CACHE)");
        cmd->add_option("--format", format, "text|json|csv");
    }
    ng->add_option("--input", sweep_input, "external graph6 stream for n > 6");
    ts->add_option("--k", sweep_k, "subset size k");
    ts->add_option("--ell", sweep_ell, "color budget")->required();

    // ---- claims ----
    auto* claims_cmd = app.add_subcommand("claims", "per-claim verification suites");
    std::string suite;
    int claims_n = -1, n_max = -1, trials = 50;
    bool strict = false;
    claims_cmd->add_option("--suite", suite, "prop3|obs1|thm3|lemma3|example1|chain")->required();
    claims_cmd->add_option("--n", claims_n, "single order");
    claims_cmd->add_option("--n-max", n_max, "largest order");
    claims_cmd->add_option("--trials", trials, "random trials for lemma3");
    claims_cmd->add_flag("--strict", strict, "exit 2 on any refuted instance");
    claims_cmd->add_option("--format", format, "text|json|csv");

    // ---- cache-check ----
    auto* cache_check = app.add_subcommand("cache-check", "validate a result cache");
    std::string check_path;
    double fraction = 0.01;
    cache_check->add_option("--cache", check_path, "cache path (default $RVX_CACHE)");
    cache_check->add_option("--fraction", fraction, "spot-check fraction");
    cache_check->add_option("--format", format, "text|json");

    std::vector<const char*> argv;
    argv.push_back("rvx");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*compute) {
            std::string source, value;
            std::vector<Graph> graphs = load_inputs(compute_in, source, value);
            std::string cache_path = default_cache_path(compute_cache);
            RvxCache cache;
            if (!cache_path.empty()) cache = RvxCache::load(cache_path);
            std::optional<int> cap;
            if (max_colors >= 0) cap = max_colors;

            json results = json::array();
            RvxStats total;
            long long cache_hits = 0;
            for (const Graph& g : graphs) {
                json item;
                item["g6"] = write_graph6(g);
                item["k"] = compute_k;
                auto hit = cache_path.empty() ? std::nullopt : cache.lookup(g, compute_k);
                if (hit && !certificates) {
                    ++cache_hits;
                    item["value"] = *hit;
                    item["exceeded"] = false;
                    item["from_cache"] = true;
                } else {
                    RvxResult r = rvx(g, compute_k, cap, certificates);
                    total.colorings_examined += r.stats.colorings_examined;
                    total.subsets_checked += r.stats.subsets_checked;
                    item["from_cache"] = false;
                    if (r.exceeded) {
                        item["value"] = nullptr;
                        item["exceeded"] = true;
                        item["note"] = "> " + std::to_string(*cap);
                    } else {
                        item["value"] = r.value;
                        item["exceeded"] = false;
                        item["witness"] = r.witness.to_string();
                        if (!cache_path.empty()) cache.insert(g, compute_k, r.value);
                        if (certificates) {
                            json certs = json::object();
                            for (const auto& [s, t] : r.certificates)
                                certs[subset_str(s)] = {{"edges", witness_tree_str(t)},
                                                        {"internal", subset_str(t.internal)}};
                            item["certificates"] = certs;
                        }
                    }
                }
                results.push_back(item);
            }
            if (!cache_path.empty()) cache.store(cache_path);
            json doc = {{"command", "compute"},
                        {"input", {{"source", source}, {"value", value}}},
                        {"params",
                         {{"k", compute_k},
                          {"max_colors", max_colors >= 0 ? json(max_colors) : json(nullptr)},
                          {"cache", cache_path.empty() ? json(nullptr) : json(cache_path)}}},
                        {"result", results},
                        {"stats",
                         {{"colorings_examined", total.colorings_examined},
                          {"subsets_checked", total.subsets_checked},
                          {"cache_hits", cache_hits}}},
                        {"claims", json::array()}};
            emit(
                out, format, doc,
                [&](std::ostream& o) {
                    for (const auto& item : results) {
                        o << item["g6"].get<std::string>() << "  rvx_" << compute_k << " = ";
                        if (item["exceeded"].get<bool>())
                            o << item["note"].get<std::string>();
                        else
                            o << item["value"].get<int>();
                        if (item.contains("witness"))
                            o << "  witness " << item["witness"].get<std::string>();
                        if (item["from_cache"].get<bool>()) o << "  (cached)";
                        o << "\n";
                        if (item.contains("certificates"))
                            for (auto& [s, t] : item["certificates"].items())
                                o << "  S={" << s << "}: tree " << t["edges"].get<std::string>()
                                  << " internal {" << t["internal"].get<std::string>() << "}\n";
                    }
                    o << "stats: " << total.colorings_examined << " colorings, "
                      << total.subsets_checked << " subset checks, " << cache_hits
                      << " cache hits\n";
                },
                [&](std::ostream& o) {
                    o << "g6,k,value\n";
                    for (const auto& item : results)
                        o << item["g6"].get<std::string>() << "," << compute_k << ","
                          << (item["exceeded"].get<bool>() ? std::string("NA")
                                                           : std::to_string(item["value"].get<int>()))
                          << "\n";
                });
            return 0;
        }

        if (*sdiam_cmd) {
            std::string source, value;
            std::vector<Graph> graphs = load_inputs(sdiam_in, source, value);
            json results = json::array();
            for (const Graph& g : graphs)
                results.push_back({{"g6", write_graph6(g)}, {"sdiam", sdiam(g, sdiam_k)}});
            json doc = {{"command", "sdiam"},
                        {"input", {{"source", source}, {"value", value}}},
                        {"params", {{"k", sdiam_k}}},
                        {"result", results},
                        {"stats", json::object()},
                        {"claims", json::array()}};
            emit(
                out, format, doc,
                [&](std::ostream& o) {
                    for (const auto& item : results)
                        o << item["g6"].get<std::string>() << "  sdiam_" << sdiam_k << " = "
                          << item["sdiam"].get<int>() << "\n";
                },
                [&](std::ostream& o) {
                    o << "g6,k,sdiam\n";
                    for (const auto& item : results)
                        o << item["g6"].get<std::string>() << "," << sdiam_k << ","
                          << item["sdiam"].get<int>() << "\n";
                });
            return 0;
        }

        if (*verify) {
            std::string source, value;
            std::vector<Graph> graphs = load_inputs(verify_in, source, value);
            VertexColoring c = VertexColoring::parse(colors_csv);
            json results = json::array();
            for (const Graph& g : graphs) {
                auto failing = first_failing_subset(g, c, verify_k);
                json item = {{"g6", write_graph6(g)}, {"ok", !failing.has_value()}};
                if (failing) item["failing_subset"] = subset_str(*failing);
                results.push_back(item);
            }
            json doc = {{"command", "verify"},
                        {"input", {{"source", source}, {"value", value}}},
                        {"params", {{"k", verify_k}, {"colors", colors_csv}}},
                        {"result", results},
                        {"stats", json::object()},
                        {"claims", json::array()}};
            emit(
                out, format, doc,
                [&](std::ostream& o) {
                    for (const auto& item : results) {
                        o << item["g6"].get<std::string>() << "  ";
                        if (item["ok"].get<bool>())
                            o << "ok: every " << verify_k << "-subset has a vertex-rainbow tree\n";
                        else
                            o << "fails at S={" << item["failing_subset"].get<std::string>()
                              << "}\n";
                    }
                },
                [&](std::ostream& o) {
                    o << "g6,k,ok,failing_subset\n";
                    for (const auto& item : results)
                        o << item["g6"].get<std::string>() << "," << verify_k << ","
                          << (item["ok"].get<bool>() ? "1" : "0") << ","
                          << (item.contains("failing_subset")
                                  ? item["failing_subset"].get<std::string>()
                                  : std::string())
                          << "\n";
                });
            return 0;
        }

        if (*family) {
            Graph g = make_family_spec(family_spec);
            std::string payload = emit_format == "edges" ? write_edge_list(g) : write_graph6(g);
            if (emit_format != "edges" && emit_format != "g6")
                throw std::invalid_argument("--emit must be g6 or edges, got '" + emit_format + "'");
            json doc = {{"command", "family"},
                        {"input", {{"source", "family"}, {"value", family_spec}}},
                        {"params", {{"emit", emit_format}}},
                        {"result", {{"order", g.order()}, {"edges", g.edge_count()},
                                    {"payload", payload}}},
                        {"stats", json::object()},
                        {"claims", json::array()}};
            emit(
                out, format, doc,
                [&](std::ostream& o) { o << payload << (payload.back() == '\n' ? "" : "\n"); },
                [&](std::ostream& o) { o << payload << (payload.back() == '\n' ? "" : "\n"); });
            return 0;
        }

        if (*sweep) {
            std::string cache_path = default_cache_path(sweep_cache);
            RvxCache cache;
            if (!cache_path.empty()) cache = RvxCache::load(cache_path);
            RvxCache* cp = cache_path.empty() ? nullptr : &cache;
            json doc;
            if (*ng) {
                NgSweepResult r;
                if (!sweep_input.empty()) {
                    InputFlags in;
                    in.file = sweep_input;
                    std::string source, value;
                    r = ng_sweep_over(load_inputs(in, source, value), sweep_n, cp);
                } else {
                    r = ng_sweep(sweep_n, cp);
                }
                doc = {{"command", "sweep ng"},
                       {"input", sweep_input.empty() ? json(nullptr) : json(sweep_input)},
                       {"params", {{"n", sweep_n}, {"jobs", jobs}}},
                       {"result",
                        {{"n", r.n},
                         {"pairs_examined", r.pairs_examined},
                         {"min_sum", r.min_sum},
                         {"max_sum", r.max_sum},
                         {"min_pairs", r.min_pairs},
                         {"max_pairs", r.max_pairs},
                         {"bound_status", r.bound_status}}},
                       {"stats", json::object()},
                       {"claims", json::array()}};
                emit(
                    out, format, doc,
                    [&](std::ostream& o) {
                        o << "ng sweep n=" << r.n << ": " << r.pairs_examined
                          << " pairs, sum range [" << r.min_sum << ", " << r.max_sum << "]\n";
                        o << "  min attained by:";
                        for (const auto& s : r.min_pairs) o << " " << s;
                        o << "\n  max attained by:";
                        for (const auto& s : r.max_pairs) o << " " << s;
                        o << "\n  " << r.bound_status << "\n";
                    },
                    [&](std::ostream& o) {
                        o << "n,pairs_examined,min_sum,max_sum\n"
                          << r.n << "," << r.pairs_examined << "," << r.min_sum << ","
                          << r.max_sum << "\n";
                    });
            } else {
                TSearchResult r = t_search(sweep_n, sweep_k, sweep_ell, cp);
                doc = {{"command", "sweep tsearch"},
                       {"input", nullptr},
                       {"params", {{"n", sweep_n}, {"k", sweep_k}, {"ell", sweep_ell}, {"jobs", jobs}}},
                       {"result",
                        {{"n", r.n},
                         {"k", r.k},
                         {"ell", r.ell},
                         {"t_value", r.t_value},
                         {"extremal", r.extremal},
                         {"bound_status", r.bound_status}}},
                       {"stats", json::object()},
                       {"claims", json::array()}};
                emit(
                    out, format, doc,
                    [&](std::ostream& o) {
                        o << "t(" << r.n << "," << r.k << "," << r.ell << ") = " << r.t_value
                          << "\n  extremal:";
                        for (const auto& s : r.extremal) o << " " << s;
                        o << "\n  " << r.bound_status << "\n";
                    },
                    [&](std::ostream& o) {
                        o << "n,k,ell,t_value\n"
                          << r.n << "," << r.k << "," << r.ell << "," << r.t_value << "\n";
                    });
            }
            if (cp) cache.store(cache_path);
            return 0;
        }

        if (*claims_cmd) {
            std::vector<ClaimReport> reports;
            if (suite == "prop3") {
                int lo = claims_n > 0 ? claims_n : 4;
                int hi = claims_n > 0 ? claims_n : (n_max > 0 ? n_max : 6);
                for (int n = lo; n <= hi; ++n) reports.push_back(check_prop3(n));
            } else if (suite == "obs1") {
                int cap = claims_n > 0 ? claims_n : (n_max > 0 ? n_max : 7);
                reports.push_back(check_obs1(cap));
            } else if (suite == "thm3") {
                for (auto [n, ell] : {std::pair{8, 2}, {8, 3}, {9, 2}, {9, 3}, {10, 3}})
                    reports.push_back(check_theorem3_construction(n, ell, 3));
            } else if (suite == "lemma3") {
                int n = claims_n > 0 ? claims_n : 5;
                for (const Graph& g : enumerate_connected_graphs(n))
                    for (int q = 1; q <= n; ++q) reports.push_back(check_lemma3(g, q, trials));
            } else if (suite == "example1") {
                int lo = claims_n > 0 ? claims_n : 5;
                int hi = claims_n > 0 ? claims_n : (n_max > 0 ? n_max : 8);
                for (int n = lo; n <= hi; ++n) reports.push_back(check_example1(n));
            } else if (suite == "chain") {
                int cap = claims_n > 0 ? claims_n : (n_max > 0 ? n_max : 5);
                int lo = claims_n > 0 ? claims_n : 2;
                for (int n = lo; n <= cap; ++n)
                    for (const Graph& g : enumerate_connected_graphs(n))
                        reports.push_back(check_monotonic_chain(g));
            } else {
                throw std::invalid_argument("unknown suite '" + suite + "'");
            }
            return run_claim_suites(reports, format, strict, suite, out);
        }

        if (*cache_check) {
            std::string path = default_cache_path(check_path);
            if (path.empty()) throw std::invalid_argument("cache-check: --cache or RVX_CACHE required");
            RvxCache cache = RvxCache::load(path);
            std::mt19937_64 rng(0x5eed);
            std::bernoulli_distribution pick(fraction);
            long long checked = 0, mismatches = 0;
            std::size_t idx = 0;
            for (const auto& [key, value] : cache.entries()) {
                bool take = pick(rng) || idx == 0;  // always check at least one entry
                ++idx;
                if (!take) continue;
                ++checked;
                Graph g = parse_graph6(key.first);
                if (g.order() > 9) continue;  // recomputation guard for big external graphs
                if (rvx(g, key.second).value != value) ++mismatches;
            }
            json doc = {{"command", "cache-check"},
                        {"input", path},
                        {"params", {{"fraction", fraction}}},
                        {"result",
                         {{"entries", cache.size()}, {"checked", checked}, {"mismatches", mismatches}}},
                        {"stats", json::object()},
                        {"claims", json::array()}};
            emit(
                out, format, doc,
                [&](std::ostream& o) {
                    o << "cache " << path << ": " << cache.size() << " entries, " << checked
                      << " spot-checked, " << mismatches << " mismatches\n";
                },
                [&](std::ostream& o) {
                    o << "entries,checked,mismatches\n"
                      << cache.size() << "," << checked << "," << mismatches << "\n";
                });
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace rvx
