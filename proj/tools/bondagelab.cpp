#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bondagelab/bondage.hpp"
#include "bondagelab/certifier.hpp"
#include "bondagelab/configurations.hpp"
#include "bondagelab/corpus.hpp"
#include "bondagelab/discharging.hpp"
#include "bondagelab/domination.hpp"
#include "bondagelab/error.hpp"
#include "bondagelab/generators.hpp"
#include "bondagelab/plg.hpp"

using namespace bondagelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitFalsified = 2;

int default_jobs() {
    if (const char* env = std::getenv("BONDAGELAB_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring BONDAGELAB_JOBS=" << env << '\n';
        }
    }
    return 1;
}

PlaneGraph load(const std::string& path) {
    if (path == "-") return read_plg(std::cin);
    return read_plg_file(path);
}

void check_size(const PlaneGraph& g, int cap, bool force, const char* what) {
    if (!force && g.num_vertices() > cap)
        throw Error(Errc::TooLarge, std::string(what) + " is capped at n <= " + std::to_string(cap) + " (n = " +
                                        std::to_string(g.num_vertices()) + "); pass --force to override");
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string join(const std::vector<Edge>& es) {
    std::string s;
    for (std::size_t i = 0; i < es.size(); ++i) s += (i ? "," : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
    return s;
}

// A missing configuration or an exhausted search only contradicts the
// structural claims when the graph has minimum degree at least 3.
int classify(const Error& e, const PlaneGraph* g) {
    const bool falsifying = e.code() == Errc::NoConfiguration || e.code() == Errc::SearchExhausted;
    if (falsifying && g && g->min_degree() >= 3) {
        std::cerr << "FALSIFICATION: " << e.what() << '\n';
        return kExitFalsified;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
}

struct Options {
    std::string file;
    bool force = false;
    int jobs = default_jobs();
    int limit = 8;
    bool first = false;
    std::string scheme = "vertex";
    bool ledger = false;
    std::string kind;
    std::vector<std::int64_t> params;
    std::string output;
    std::uint64_t seed = 1;
    int count = 100;
    int max_n = 20;
    bool timing = false;
};

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw Error(Errc::BadParams, "cannot write " + output);
    out << text;
}

int cmd_gamma_i(const Options& o) {
    const PlaneGraph g = load(o.file);
    check_size(g, 64, o.force, "gamma-i");
    const auto r = gamma_i(g);
    std::cout << "gamma_i = " << r.value << '\n' << "witness = " << join(r.witness.vertices) << '\n';
    return kExitOk;
}

int cmd_bondage_i(const Options& o) {
    const PlaneGraph g = load(o.file);
    check_size(g, 20, o.force, "bondage-i");
    const auto r = bondage_i(g, o.limit, o.jobs);
    if (r.value) {
        std::cout << "b_i = " << *r.value << '\n'
                  << "edges = " << join(r.witness_edges) << '\n'
                  << "gamma_i " << r.gamma_i_before << " -> " << r.gamma_i_after << '\n';
    } else {
        std::cout << "b_i > " << o.limit << '\n' << "gamma_i " << r.gamma_i_before << '\n';
    }
    return kExitOk;
}

int cmd_find_config(const Options& o) {
    const PlaneGraph g = load(o.file);
    std::vector<ConfigurationWitness> found;
    if (o.first) {
        if (auto w = find_configuration(g)) found.push_back(*w);
    } else {
        found = detect_edge_configs(g);
        for (auto& w : detect_vertex_configs(g)) found.push_back(std::move(w));
    }
    for (const auto& w : found) std::cout << to_string(w) << '\n';
    if (found.empty()) {
        std::cout << "none\n";
        return classify(Error(Errc::NoConfiguration, "no configuration in graph"), &g);
    }
    return kExitOk;
}

int cmd_discharge(const Options& o) {
    const PlaneGraph g = load(o.file);
    const Scheme s = o.scheme == "face" ? Scheme::Face : o.scheme == "balanced" ? Scheme::Balanced : Scheme::Vertex;
    ChargeState st = initial_charges(g, s);
    if (s == Scheme::Vertex) st = apply_rules(g, st);
    std::cout << audit(st).text(o.ledger);
    return kExitOk;
}

int cmd_certify(const Options& o) {
    const PlaneGraph g = load(o.file);
    check_size(g, 20, o.force, "certify");
    try {
        const auto c = certify(g, o.jobs);
        std::cout << to_string(c) << '\n';
        if (!c.fallback_reason.empty()) std::cout << "fallback " << c.fallback_reason << '\n';
        return c.verified ? kExitOk : kExitInvalid;
    } catch (const Error& e) {
        return classify(e, &g);
    }
}

int cmd_gen(const Options& o) {
    emit(to_plg(generate(o.kind, o.params)), o.output);
    return kExitOk;
}

int cmd_corpus(const Options& o) {
    RunLimits limits;
    limits.jobs = o.jobs;
    if (o.force) limits.gamma_i_max_n = limits.certify_max_n = kSolverMaxVertices;
    const auto report = run_corpus(make_corpus(o.seed, o.count, o.max_n), limits);
    emit(report.text(o.timing), o.output);
    if (report.falsifications() > 0) {
        std::cerr << "FALSIFICATION: " << report.falsifications() << " graph(s) without a configuration or certificate\n";
        return kExitFalsified;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent domination, configurations and bondage certificates on plane graphs"};
    app.require_subcommand(1);
    Options o;
    int (*run)(const Options&) = nullptr;

    const auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, ".plg file, or - for stdin")->required(); };
    const auto force_flag = [&](CLI::App* sub) { sub->add_flag("--force", o.force, "lift the default size cap"); };
    const auto jobs_opt = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "worker threads (default: BONDAGELAB_JOBS or 1)")->check(CLI::PositiveNumber);
    };

    auto* gi = app.add_subcommand("gamma-i", "minimum independent dominating set");
    file_arg(gi);
    force_flag(gi);
    gi->callback([&] { run = cmd_gamma_i; });

    auto* bi = app.add_subcommand("bondage-i", "independent bondage number up to a limit");
    file_arg(bi);
    bi->add_option("--limit", o.limit, "largest deletion set to try")->check(CLI::PositiveNumber);
    force_flag(bi);
    jobs_opt(bi);
    bi->callback([&] { run = cmd_bondage_i; });

    auto* fc = app.add_subcommand("find-config", "list configurations (a)-(h)");
    file_arg(fc);
    fc->add_flag("--first", o.first, "only the first configuration in scan order");
    fc->callback([&] { run = cmd_find_config; });

    auto* dc = app.add_subcommand("discharge", "charge audit");
    file_arg(dc);
    dc->add_option("--scheme", o.scheme, "initial charge scheme")->check(CLI::IsMember({"vertex", "face", "balanced"}));
    dc->add_flag("--ledger", o.ledger, "print per-rule sums and every transfer");
    dc->callback([&] { run = cmd_discharge; });

    auto* ce = app.add_subcommand("certify", "certificate that at most 8 deletions raise gamma_i");
    file_arg(ce);
    force_flag(ce);
    jobs_opt(ce);
    ce->callback([&] { run = cmd_certify; });

    auto* gen = app.add_subcommand("gen", "write a generated graph");
    gen->add_option("kind", o.kind, "cycle|wheel|fan|k4|octahedron|icosahedron|prism|cube|stacked|sparse")->required();
    gen->add_option("params", o.params, "integer parameters, e.g. n and seed");
    gen->add_option("-o,--output", o.output, "output file (default stdout)");
    gen->callback([&] { run = cmd_gen; });

    auto* co = app.add_subcommand("corpus", "generate a corpus and run every check on it");
    co->add_option("--seed", o.seed, "corpus seed");
    co->add_option("--count", o.count, "number of graphs")->check(CLI::NonNegativeNumber);
    co->add_option("--max-n", o.max_n, "largest vertex count")->check(CLI::Range(4, kSolverMaxVertices));
    co->add_option("-o,--output", o.output, "report file (default stdout)");
    co->add_flag("--timing", o.timing, "append wall times (output is then not reproducible)");
    force_flag(co);
    jobs_opt(co);
    co->callback([&] { run = cmd_corpus; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        return run(o);
    } catch (const Error& e) {
        return classify(e, nullptr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
