#include "bondagelab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "bondagelab/certifier.hpp"
#include "bondagelab/configurations.hpp"
#include "bondagelab/discharging.hpp"
#include "bondagelab/domination.hpp"
#include "bondagelab/error.hpp"
#include "bondagelab/generators.hpp"

namespace bondagelab {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

CorpusGraph draw(std::mt19937_64& rng, int index, int max_n) {
    const std::string prefix = std::to_string(index) + ":";
    // Each slot of the cycle below is a generator; small max_n drops the
    // ones that cannot fit.
    for (;;) {
        switch (index % 6) {
            case 0:
            case 3: {
                const int n = uniform(rng, 4, max_n);
                const std::uint64_t s = rng();
                return {prefix + "stacked(" + std::to_string(n) + "," + std::to_string(s) + ")",
                        make_stacked_triangulation(n, s)};
            }
            case 1:
            case 4: {
                if (max_n < 6) break;
                const int n = uniform(rng, 6, max_n);
                const std::uint64_t s = rng();
                return {prefix + "sparse(" + std::to_string(n) + "," + std::to_string(s) + ")",
                        make_sparse_planar(n, s)};
            }
            case 2: {
                if (max_n < 6) break;
                const int k = uniform(rng, 3, max_n / 2);
                return {prefix + "prism(" + std::to_string(k) + ")", make_prism(k)};
            }
            case 5: {
                const int pick = uniform(rng, 0, 3);
                if (pick == 0 && max_n >= 12) return {prefix + "icosahedron", make_icosahedron()};
                if (pick == 1 && max_n >= 6) return {prefix + "octahedron", make_octahedron()};
                if (pick == 2 || max_n < 5) return {prefix + "k4", make_k4()};
                const int rim = uniform(rng, 3, max_n - 1);
                return {prefix + "wheel(" + std::to_string(rim) + ")", make_wheel(rim)};
            }
        }
        ++index;  // fall through to the next generator slot
    }
}

}  // namespace

std::vector<CorpusGraph> make_corpus(std::uint64_t seed, int count, int max_n) {
    if (count < 0 || max_n < 4) throw Error(Errc::BadParams, "corpus needs count >= 0 and max_n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<CorpusGraph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        out.push_back(draw(rng, i, max_n));
    }
    return out;
}

std::string GraphRecord::line(bool timing) const {
    std::ostringstream out;
    out << "graph " << id << " n=" << n << " m=" << m << " delta=" << min_degree
        << " gamma_i=" << (gamma_i ? std::to_string(*gamma_i) : "skipped") << " config=" << config
        << " cert=" << certificate << " audit=" << audit;
    if (timing) out << " time_ms=" << std::fixed << std::setprecision(1) << wall_ms;
    return out.str();
}

int RunReport::falsifications() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.falsified; }));
}

std::string RunReport::text(bool timing) const {
    std::ostringstream out;
    int found = 0, certified = 0, attempted = 0;
    double wall = 0;
    for (const auto& r : records) {
        out << r.line(timing) << '\n';
        found += r.config_found;
        certified += r.certified;
        attempted += r.certificate != "skipped";
        wall += r.wall_ms;
    }
    out << "summary graphs=" << records.size() << '\n'
        << "summary configurations=" << found << '\n'
        << "summary certificates=" << certified << '/' << attempted << '\n'
        << "summary falsifications=" << falsifications() << '\n';
    if (timing) out << "summary time_ms=" << std::fixed << std::setprecision(1) << wall << '\n';
    return out.str();
}

GraphRecord run_graph(const CorpusGraph& c, const RunLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    const PlaneGraph& g = c.graph;
    GraphRecord r;
    r.id = c.id;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.min_degree = g.min_degree();
    const bool hypotheses = r.min_degree >= 3;

    if (r.n <= limits.gamma_i_max_n) r.gamma_i = gamma_i(g).value;

    const auto w = find_configuration(g);
    if (w) {
        r.config_found = true;
        r.config = std::string(kind_name(w->kind)) + "@" +
                   (w->edge ? std::to_string(w->edge->u) + "-" + std::to_string(w->edge->v) : std::to_string(w->center));
    } else if (hypotheses) {
        r.falsified = true;
    }

    if (w && r.n <= limits.certify_max_n) {
        try {
            const BondageCertificate cert = is_edge_kind(w->kind) ? certify_edge_config(g, *w, 1)
                                                                  : certify_vertex_config(g, *w, 1);
            r.certified = cert.verified;
            r.certificate = std::string(path_name(cert.path)) + ":|E|=" + std::to_string(cert.edges.size()) +
                            ",gi=" + std::to_string(cert.gamma_i_before) + "->" + std::to_string(cert.gamma_i_after) +
                            (cert.verified ? ",verified" : ",unverified");
        } catch (const Error& e) {
            r.certificate = std::string(errc_name(e.code()));
            if (e.code() == Errc::SearchExhausted && hypotheses) r.falsified = true;
        }
    }

    const AuditReport a = audit(apply_rules(g, initial_charges(g, Scheme::Vertex)));
    r.audit = "neg:" + std::to_string(a.negatives.size()) + ",total:" + a.total.str() +
              ",transfers:" + std::to_string(a.transfers());

    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

RunReport run_corpus(const std::vector<CorpusGraph>& corpus, const RunLimits& limits) {
    RunReport report;
    report.records.resize(corpus.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(corpus.size());
    const auto worker = [&] {
        for (std::size_t i; (i = next++) < corpus.size();) {
            try {
                report.records[i] = run_graph(corpus[i], limits);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(limits.jobs, static_cast<int>(corpus.size())));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return report;
}

}  // namespace bondagelab
