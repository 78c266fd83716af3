#include "cli.hpp"

#include "result_cache.hpp"

#include "borelz/chromatic.hpp"
#include "borelz/errors.hpp"
#include "borelz/formats.hpp"
#include "borelz/period.hpp"
#include "borelz/transition_graph.hpp"
#include "borelz/witness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace borelz::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::unique_ptr<FileDecisionCache> open_cache(const RunConfig& config) {
    if (config.cache_path.empty()) return nullptr;
    return std::make_unique<FileDecisionCache>(config.cache_path);
}

std::string resolve_cache_path(const std::string& flag, bool disabled) {
    if (disabled) return {};
    if (!flag.empty()) return flag;
    if (const char* dir = std::getenv("BORELZ_CACHE_DIR"); dir && *dir) {
        return (std::filesystem::path(dir) / "decisions.txt").string();
    }
    return {};
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
    body(f);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot open '" + path + "'");
    return f;
}

// ---------------------------------------------------------------------------

struct DecideArgs {
    std::string sft_file;
    std::string gens;
    std::uint32_t colors = 0;
    std::string witness_out;
    std::string dot_out;
    bool full_table = false;
};

Sft instance_sft(const std::string& sft_file, const std::string& gens, std::uint32_t colors) {
    if (!sft_file.empty() && !gens.empty()) throw InvalidArgument("give either --sft or --gens, not both");
    if (!sft_file.empty()) {
        auto f = open_input(sft_file);
        return read_sft(f);
    }
    if (gens.empty() || colors == 0) throw InvalidArgument("need --sft FILE or --gens LIST with --colors B");
    return coloring_sft(GeneratorSet::parse(gens), Alphabet(colors));
}

int cmd_decide(const DecideArgs& a, const RunConfig& config, std::ostream& out) {
    const Sft sft = instance_sft(a.sft_file, a.gens, a.colors);
    BuildOptions build;
    build.vertex_budget = config.budget;
    const auto graph = TransitionGraph::build(sft, build);
    const auto sccs = strongly_connected_components(graph);
    const auto d = decide(graph, sccs, !a.full_table);

    if (!a.dot_out.empty()) {
        write_file(a.dot_out, [&](std::ostream& f) { graph.write_dot(f); });
    }
    std::optional<TwoTilesWitness> witness;
    if (d.answer && !a.witness_out.empty()) {
        witness = extract_certificate(sft, build);
        write_file(a.witness_out, [&](std::ostream& f) { write_witness(f, witness->gamma, witness->labeling); });
    }

    const std::string instance = sft.coloring_rule()
                                     ? "gens=" + sft.coloring_rule()->to_string() + " colors=" +
                                           std::to_string(sft.alphabet().size())
                                     : "sft=" + a.sft_file + " alphabet=" + std::to_string(sft.alphabet().size());
    if (config.records) {
        out << "kind=decision " << instance << " window=" << sft.window_len() << " answer=" << yes_no(d.answer)
            << " code_space=" << d.stats.code_space << " vertices=" << d.stats.vertices << " edges=" << d.stats.edges
            << " components=" << d.stats.components;
        if (d.witness_component) out << " witness_component=" << *d.witness_component;
        if (witness) out << " witness=" << a.witness_out;
        out << '\n';
        for (const auto& row : d.table) {
            if (row.internal_edges == 0) continue;
            out << "kind=scc id=" << row.id << " size=" << row.size << " internal_edges=" << row.internal_edges
                << " period=" << (row.period ? std::to_string(*row.period) : "unscanned") << '\n';
        }
    } else {
        out << "instance   " << instance << " window=" << sft.window_len() << '\n';
        out << "codes      " << d.stats.code_space << '\n';
        out << "vertices   " << d.stats.vertices << '\n';
        out << "edges      " << d.stats.edges << '\n';
        out << "components " << d.stats.components << '\n';
        std::size_t acyclic = 0;
        out << std::setw(8) << "scc" << std::setw(12) << "size" << std::setw(16) << "internal_edges" << std::setw(10)
            << "period" << '\n';
        for (const auto& row : d.table) {
            if (row.internal_edges == 0) {
                ++acyclic;
                continue;
            }
            out << std::setw(8) << row.id << std::setw(12) << row.size << std::setw(16) << row.internal_edges
                << std::setw(10) << (row.period ? std::to_string(*row.period) : "-") << '\n';
        }
        if (acyclic) out << "(" << acyclic << " components without cycles not shown)\n";
        out << "answer     " << yes_no(d.answer) << '\n';
        if (witness) out << "witness    " << a.witness_out << '\n';
    }
    return d.answer ? kExitOk : kExitFalse;
}

// ---------------------------------------------------------------------------

struct ChiArgs {
    std::string gens;
    std::string method = "auto";
    bool verify_fast_paths = false;
    bool triple_fast_path = false;
    std::string witness_out;
};

void print_chi(std::ostream& out, const GeneratorSet& gens, const ChiResult& r, bool records,
               const std::string& witness_path) {
    if (records) {
        out << "gens=" << gens.to_string() << " chi=" << (r.value ? std::to_string(*r.value) : "unknown")
            << " method=" << r.method << " lower=" << r.bounds.lower << " upper=" << r.bounds.upper
            << " clique=" << r.bounds.clique << " kappa=" << r.bounds.core_chromatic << " decisions=";
        bool first = true;
        for (const auto& [b, yes] : r.per_b_decisions) {
            out << (first ? "" : ",") << b << ':' << yes_no(yes);
            first = false;
        }
        if (first) out << '-';
        if (!witness_path.empty()) out << " witness=" << witness_path;
        out << '\n';
        return;
    }
    out << "S          " << gens.to_string() << '\n';
    out << "chi        " << (r.value ? std::to_string(*r.value) : "unknown (bounds only)") << '\n';
    out << "bounds     " << r.bounds.lower << " <= chi <= " << r.bounds.upper << "  (lambda=" << r.bounds.clique
        << ", kappa=" << r.bounds.core_chromatic << ", upper from " << r.bounds.upper_source << ")\n";
    out << "method     " << r.method << '\n';
    for (const auto& [b, yes] : r.per_b_decisions) {
        out << "bpc        b=" << b << " " << yes_no(yes) << '\n';
    }
    if (!witness_path.empty()) out << "witness    " << witness_path << '\n';
}

int cmd_chi(const ChiArgs& a, const RunConfig& config, std::ostream& out) {
    const auto gens = GeneratorSet::parse(a.gens);
    auto cache = open_cache(config);
    ChiOptions opts;
    opts.method = parse_chi_method(a.method);
    opts.verify_fast_paths = a.verify_fast_paths;
    opts.fast_paths.triple_formula = a.triple_fast_path;
    opts.want_witness = !a.witness_out.empty();
    opts.build.vertex_budget = config.budget;
    opts.cache = cache.get();
    const auto r = chi(gens, opts);
    if (r.witness) {
        write_file(a.witness_out, [&](std::ostream& f) { write_witness(f, r.witness->gamma, r.witness->labeling); });
    }
    print_chi(out, gens, r, config.records, r.witness ? a.witness_out : "");
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::string sft_file;
    std::string gens;
    std::uint32_t colors = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    auto f = open_input(a.file);
    const auto kind = sniff_certificate_kind(f);
    if (kind == "tiles") {
        if (a.gens.empty()) throw InvalidArgument("verifying a tile file needs --gens");
        const auto gens = GeneratorSet::parse(a.gens);
        const auto t = read_tiles(f);
        if (auto why = tile_pair_failure(t.c1, t.c2, gens, t.ell)) {
            out << "FAIL tiles: " << *why << '\n';
            return kExitFalse;
        }
        out << "ok tiles ell=" << t.ell << " p=" << t.c1.size() - t.ell << " q=" << t.c2.size() - t.ell << '\n';
        return kExitOk;
    }

    const auto w = read_witness(f);
    std::uint32_t colors = a.colors;
    if (colors == 0 && a.sft_file.empty()) {
        Symbol top = 0;
        for (auto s : w.labeling) top = std::max(top, s);
        colors = top + 1;
    }
    const Sft sft = instance_sft(a.sft_file, a.gens, colors);
    if (w.n < 1 || w.n >= w.p || w.n >= w.q) {
        out << "FAIL witness: need 1 <= n < p, q\n";
        return kExitFalse;
    }
    const TwoTilesWitness witness{TwoTilesGraph(w.n, w.p, w.q), w.labeling, sft};
    if (auto why = two_tiles_failure(witness)) {
        out << "FAIL witness: " << *why << '\n';
        return kExitFalse;
    }
    out << "ok witness n=" << w.n << " p=" << w.p << " q=" << w.q << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string family = "pairs";
    std::uint32_t bound = 9;
    std::string method = "auto";
    std::vector<std::uint32_t> kappa;
    bool verify_fast_paths = false;
    bool triple_fast_path = false;
    std::string witness_dir;
};

int cmd_sweep(const SweepArgs& a, const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto family = enumerate_family(a.family, a.bound);
    if (!a.kappa.empty()) {
        std::erase_if(family, [&](const GeneratorSet& g) {
            auto k = bounds(g).core_chromatic;
            return std::find(a.kappa.begin(), a.kappa.end(), k) == a.kappa.end();
        });
    }
    if (!a.witness_dir.empty()) std::filesystem::create_directories(a.witness_dir);
    auto cache = open_cache(config);

    struct Row {
        std::string text;
        std::string error;
        bool capacity = false;
    };
    std::vector<Row> rows(family.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < family.size(); i = next++) {
            const auto& gens = family[i];
            try {
                ChiOptions opts;
                opts.method = parse_chi_method(a.method);
                opts.verify_fast_paths = a.verify_fast_paths;
                opts.fast_paths.triple_formula = a.triple_fast_path;
                opts.want_witness = !a.witness_dir.empty();
                opts.build.vertex_budget = config.budget;
                opts.cache = cache.get();
                const auto r = chi(gens, opts);
                std::string wpath;
                if (r.witness) {
                    auto name = gens.to_string();
                    std::replace(name.begin(), name.end(), ',', '_');
                    wpath = (std::filesystem::path(a.witness_dir) / ("S_" + name + ".witness")).string();
                    write_file(wpath, [&](std::ostream& f) { write_witness(f, r.witness->gamma, r.witness->labeling); });
                }
                std::ostringstream line;
                print_chi(line, gens, r, true, wpath);
                rows[i].text = line.str();
            } catch (const CapacityError& e) {
                rows[i].error = e.what();
                rows[i].capacity = true;
            }
        }
    };
    const unsigned n_workers = std::max(1U, std::min<unsigned>(config.workers, static_cast<unsigned>(family.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);
        worker();
    }
    bool any_capacity = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!rows[i].error.empty()) {
            out << "gens=" << family[i].to_string() << " chi=skipped reason=capacity\n";
            err << family[i].to_string() << ": " << rows[i].error << '\n';
            any_capacity = true;
        } else {
            out << rows[i].text;
        }
    }
    return any_capacity ? kExitCapacity : kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_bench(const std::vector<std::string>& instances, const RunConfig& config, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    for (const auto& spec : instances) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw InvalidArgument("instance '" + spec + "' must look like 1,5,8:3");
        const auto gens = GeneratorSet::parse(spec.substr(0, colon));
        const auto colors = static_cast<std::uint32_t>(std::stoul(spec.substr(colon + 1)));
        const Sft sft = coloring_sft(gens, Alphabet(colors));
        BuildOptions build;
        build.vertex_budget = config.budget;

        auto t0 = clock::now();
        const auto graph = TransitionGraph::build(sft, build);
        auto t1 = clock::now();
        const auto sccs = strongly_connected_components(graph);
        auto t2 = clock::now();
        const auto d = decide(graph, sccs, false);
        auto t3 = clock::now();
        out << std::fixed << std::setprecision(3) << "gens=" << gens.to_string() << " colors=" << colors
            << " codes=" << sft.code_space() << " vertices=" << graph.vertex_count() << " edges=" << graph.edge_count()
            << " components=" << sccs.component_count() << " answer=" << yes_no(d.answer)
            << " build_ms=" << ms(t1 - t0) << " scc_ms=" << ms(t2 - t1) << " period_ms=" << ms(t3 - t2) << '\n';
    }
    return kExitOk;
}

} // namespace

// ---------------------------------------------------------------------------

std::vector<GeneratorSet> enumerate_family(const std::string& family, std::uint32_t bound) {
    std::vector<GeneratorSet> out;
    auto add_if_generating = [&](std::vector<std::uint32_t> v) {
        std::uint32_t g = 0;
        for (auto a : v) g = std::gcd(g, a);
        if (g == 1) out.emplace_back(std::move(v));
    };
    if (family == "pairs") {
        for (std::uint32_t a2 = 2; a2 <= bound; ++a2)
            for (std::uint32_t a1 = 1; a1 < a2; ++a1) add_if_generating({a1, a2});
    } else if (family == "triples") {
        for (std::uint32_t a3 = 3; a3 <= bound; ++a3)
            for (std::uint32_t a2 = 2; a2 < a3; ++a2)
                for (std::uint32_t a1 = 1; a1 < a2; ++a1) add_if_generating({a1, a2, a3});
    } else if (family == "odd" || family == "all") {
        std::vector<std::uint32_t> pool;
        for (std::uint32_t x = 1; x <= bound; ++x) {
            if (family == "all" || x % 2 == 1) pool.push_back(x);
        }
        if (pool.size() > 24) throw InvalidArgument("family '" + family + "' with bound " + std::to_string(bound) + " is too large");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            std::vector<std::uint32_t> v;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if ((mask >> i) & 1U) v.push_back(pool[i]);
            }
            add_if_generating(std::move(v));
        }
        std::sort(out.begin(), out.end(), [](const GeneratorSet& x, const GeneratorSet& y) {
            return std::make_pair(x.max(), x.values()) < std::make_pair(y.max(), y.values());
        });
    } else {
        throw InvalidArgument("unknown family '" + family + "' (pairs, triples, odd, all)");
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"borelz: Borel combinatorics of Z-actions (SFT decisions and Borel chromatic numbers)"};
    app.require_subcommand(1);

    RunConfig config;
    std::string cache_flag;
    bool no_cache = false;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", config.budget, "maximum number of transition-graph vertices")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "records"}));
    };
    auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", cache_flag, "decision cache file (default: $BORELZ_CACHE_DIR/decisions.txt)");
        sub->add_flag("--no-cache", no_cache, "ignore any configured cache");
    };

    DecideArgs decide_args;
    auto* decide_cmd = app.add_subcommand("decide", "decide whether a Borel equivariant map into an SFT exists");
    decide_cmd->add_option("--sft", decide_args.sft_file, "SFT file ('alphabet b' then one pattern per line)");
    decide_cmd->add_option("--gens", decide_args.gens, "generators a_1,...,a_n of a coloring problem");
    decide_cmd->add_option("--colors", decide_args.colors, "number of colors for --gens");
    decide_cmd->add_option("--witness-out", decide_args.witness_out, "write a two-tiles witness on yes");
    decide_cmd->add_option("--dot", decide_args.dot_out, "write the transition graph in DOT format");
    decide_cmd->add_flag("--full-table", decide_args.full_table, "compute every component's period");
    add_common(decide_cmd);

    ChiArgs chi_args;
    auto* chi_cmd = app.add_subcommand("chi", "compute the Borel chromatic number of G_S");
    chi_cmd->add_option("--gens", chi_args.gens, "generators a_1,...,a_n")->required();
    chi_cmd->add_option("--method", chi_args.method, "auto | bpc-only | bounds-only")
        ->check(CLI::IsMember({"auto", "bpc-only", "bounds-only"}));
    chi_cmd->add_flag("--verify-fast-paths", chi_args.verify_fast_paths, "confirm closed-form values with BPC");
    chi_cmd->add_flag("--triple-fast-path", chi_args.triple_fast_path, "enable the triple formula for kappa in {3,4}");
    chi_cmd->add_option("--witness-out", chi_args.witness_out, "write a two-tiles witness for chi colors");
    add_common(chi_cmd);
    add_cache(chi_cmd);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "verify a witness or tile file");
    verify_cmd->add_option("file", verify_args.file, "witness ('gamma n p q') or tile ('tiles ell') file")->required();
    verify_cmd->add_option("--sft", verify_args.sft_file, "SFT the witness must respect");
    verify_cmd->add_option("--gens", verify_args.gens, "generators (coloring SFT, or tile check)");
    verify_cmd->add_option("--colors", verify_args.colors, "colors for --gens (default: largest label + 1)");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "compute chi over a family of generator sets");
    sweep_cmd->add_option("--family", sweep_args.family, "pairs | triples | odd | all")
        ->check(CLI::IsMember({"pairs", "triples", "odd", "all"}));
    sweep_cmd->add_option("--max", sweep_args.bound, "largest generator")->check(CLI::Range(2U, 24U));
    sweep_cmd->add_option("--method", sweep_args.method, "auto | bpc-only | bounds-only")
        ->check(CLI::IsMember({"auto", "bpc-only", "bounds-only"}));
    sweep_cmd->add_option("--kappa", sweep_args.kappa, "keep only sets whose core chromatic number is listed")
        ->delimiter(',');
    sweep_cmd->add_flag("--verify-fast-paths", sweep_args.verify_fast_paths, "confirm closed-form values with BPC");
    sweep_cmd->add_flag("--triple-fast-path", sweep_args.triple_fast_path, "enable the triple formula");
    sweep_cmd->add_option("--witness-dir", sweep_args.witness_dir, "write one witness file per set");
    sweep_cmd->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
    add_common(sweep_cmd);
    add_cache(sweep_cmd);

    std::vector<std::string> bench_instances;
    auto* bench_cmd = app.add_subcommand("bench", "time graph build, SCC and period phases");
    bench_cmd->add_option("instances", bench_instances, "instances like 1,5,8:3")->required();
    bench_cmd->add_option("--budget", config.budget, "maximum number of transition-graph vertices")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"borelz"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    config.records = format == "records";
    config.cache_path = resolve_cache_path(cache_flag, no_cache);

    try {
        if (*decide_cmd) return cmd_decide(decide_args, config, out);
        if (*chi_cmd) return cmd_chi(chi_args, config, out);
        if (*verify_cmd) return cmd_verify(verify_args, out);
        if (*sweep_cmd) return cmd_sweep(sweep_args, config, out, err);
        if (*bench_cmd) return cmd_bench(bench_instances, config, out);
    } catch (const CapacityError& e) {
        err << "capacity exceeded: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace borelz::cli
