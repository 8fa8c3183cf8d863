#include "bondagelab/domination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <variant>

namespace bondagelab {

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::span<const Edge> edges) : adj_(n) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n || e.u == e.v) throw Error(Errc::InvalidId, "bad edge");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        edges_.push_back(e);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Graph::Graph(const PlaneGraph& g) : Graph(g.num_vertices(), g.edges()) {}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
    return Graph(num_vertices(), kept);
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

void check_members(int n, std::span<const int> s) {
    for (int v : s)
        if (v < 0 || v >= n) throw Error(Errc::InvalidId, "no vertex " + std::to_string(v), v);
}

}  // namespace

bool is_dominating(const Graph& g, std::span<const int> s) {
    check_members(g.num_vertices(), s);
    std::vector<char> covered(g.num_vertices(), 0);
    for (int v : s) {
        covered[v] = 1;
        for (int u : g.neighbors(v)) covered[u] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_independent(const Graph& g, std::span<const int> s) {
    check_members(g.num_vertices(), s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_dominating(const PlaneGraph& g, std::span<const int> s) { return is_dominating(Graph(g), s); }
bool is_independent(const PlaneGraph& g, std::span<const int> s) { return is_independent(Graph(g), s); }

DominatingSetWitness DominatingSetWitness::of(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    DominatingSetWitness w;
    w.independent = is_independent(g, vertices);
    w.dominating = is_dominating(g, vertices);
    w.vertices = std::move(vertices);
    return w;
}

// ---------------------------------------------------------------------------
// Branch and bound over fixed-width vertex masks

namespace {

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    friend Bits operator&(Bits a, const Bits& b) {
        for (int i = 0; i < W; ++i) a.w[i] &= b.w[i];
        return a;
    }
    friend Bits operator|(Bits a, const Bits& b) {
        for (int i = 0; i < W; ++i) a.w[i] |= b.w[i];
        return a;
    }
    Bits operator~() const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = ~w[i];
        return r;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < W; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                const int b = std::countr_zero(x);
                f(i * 64 + b);
                x &= x - 1;
            }
        }
    }
    std::vector<int> members() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }
};

enum class Mode { Minimize, FirstFeasible, EnumerateAll };

template <int W>
class Solver {
public:
    using Mask = Bits<W>;
    static constexpr int kWords = W;

    explicit Solver(const Graph& g) : n_(g.num_vertices()), closed_(n_) {
        for (int v = 0; v < n_; ++v) {
            all_.set(v);
            closed_[v].set(v);
            for (int u : g.neighbors(v)) closed_[v].set(u);
        }
    }

    void remove_edge(int u, int v) {
        closed_[u].reset(v);
        closed_[v].reset(u);
    }

    struct Search {
        bool independent = true;
        Mode mode = Mode::Minimize;
        int limit = 0;  // accept sets of size <= limit
        std::size_t cap = 0;
        std::vector<Mask> found;
        bool done = false;
    };

    /// Starts from `forced` (must be independent for IDS searches) with
    /// `forbidden` vertices excluded. Returns false if `forced` is invalid.
    bool run(Search& s, const Mask& forced, const Mask& forbidden) const {
        Mask covered;
        int size = 0;
        bool ok = true;
        forced.for_each([&](int v) {
            if (s.independent && covered.test(v)) ok = false;
            covered = covered | closed_[v];
            ++size;
        });
        if (!ok || (forced & forbidden) != Mask{}) return false;
        Mask avail = all_ & ~forbidden;
        if (s.independent) avail = avail & ~covered;
        dfs(s, forced, covered, avail, size);
        return true;
    }

private:
    void dfs(Search& s, const Mask& chosen, const Mask& covered, Mask avail, int size) const {
        if (s.done) return;
        const Mask uncovered = all_ & ~covered;
        if (uncovered.none()) {
            record(s, chosen, size);
            return;
        }
        if (size + 1 > s.limit) return;

        int best_u = -1;
        int best_c = kUnbounded;
        uncovered.for_each([&](int u) {
            if (best_c == 0) return;
            const int c = (closed_[u] & avail).count();
            if (c < best_c) {
                best_c = c;
                best_u = u;
            }
        });
        if (best_c == 0) return;

        int max_gain = 0;
        avail.for_each([&](int a) { max_gain = std::max(max_gain, (closed_[a] & uncovered).count()); });
        const int left = uncovered.count();
        const int lower = (left + max_gain - 1) / max_gain;
        if (size + lower > s.limit) return;

        const Mask cand = closed_[best_u] & avail;
        cand.for_each([&](int w) {
            if (s.done || size + 1 > s.limit) return;
            Mask next_chosen = chosen;
            next_chosen.set(w);
            Mask next_avail = avail;
            next_avail.reset(w);
            if (s.independent) next_avail = next_avail & ~closed_[w];
            dfs(s, next_chosen, covered | closed_[w], next_avail, size + 1);
            avail.reset(w);
        });
    }

    void record(Search& s, const Mask& chosen, int size) const {
        switch (s.mode) {
            case Mode::Minimize:
                s.found.assign(1, chosen);
                s.limit = size - 1;
                break;
            case Mode::FirstFeasible:
                s.found.assign(1, chosen);
                s.done = true;
                break;
            case Mode::EnumerateAll:
                s.found.push_back(chosen);
                if (s.found.size() >= s.cap) s.done = true;
                break;
        }
    }

    int n_;
    Mask all_;
    std::vector<Mask> closed_;
};

using AnySolver = std::variant<Solver<1>, Solver<2>, Solver<4>, Solver<8>>;

AnySolver make_solver(const Graph& g) {
    const int n = g.num_vertices();
    if (n <= 64) return Solver<1>(g);
    if (n <= 128) return Solver<2>(g);
    if (n <= 256) return Solver<4>(g);
    if (n <= kSolverMaxVertices) return Solver<8>(g);
    throw Error(Errc::TooLarge, "exact solver supports at most " + std::to_string(kSolverMaxVertices) + " vertices");
}

template <int W>
Bits<W> mask_of(std::span<const int> vs) {
    Bits<W> m;
    for (int v : vs) m.set(v);
    return m;
}

template <int W>
std::vector<int> minimum_value_and_lex_witness(const Solver<W>& solver, int n, bool independent, int& value) {
    using Mask = Bits<W>;
    typename Solver<W>::Search s;
    s.independent = independent;
    s.mode = Mode::Minimize;
    s.limit = n;
    solver.run(s, Mask{}, Mask{});
    value = s.found.front().count();

    // Lexicographically smallest witness: fix members one at a time, each the
    // smallest vertex that still admits a completion of size `value`.
    std::vector<int> chosen;
    int last = -1;
    for (int pos = 0; pos < value; ++pos) {
        for (int c = last + 1; c < n; ++c) {
            Mask forced = mask_of<W>(chosen);
            forced.set(c);
            Mask forbidden;
            for (int x = 0; x < c; ++x)
                if (!forced.test(x)) forbidden.set(x);
            typename Solver<W>::Search probe;
            probe.independent = independent;
            probe.mode = Mode::FirstFeasible;
            probe.limit = value;
            if (solver.run(probe, forced, forbidden) && !probe.found.empty()) {
                chosen.push_back(c);
                last = c;
                break;
            }
        }
    }
    return chosen;
}

DominationResult solve(const Graph& g, bool independent) {
    const AnySolver solver = make_solver(g);
    DominationResult r;
    std::vector<int> witness = std::visit(
        [&](const auto& s) {
            constexpr int W = std::decay_t<decltype(s)>::kWords;
            return minimum_value_and_lex_witness<W>(s, g.num_vertices(), independent, r.value);
        },
        solver);
    r.witness = DominatingSetWitness::of(g, std::move(witness));
    return r;
}

}  // namespace

DominationResult gamma(const Graph& g) { return solve(g, false); }
DominationResult gamma(const PlaneGraph& g) { return gamma(Graph(g)); }
DominationResult gamma_i(const Graph& g) { return solve(g, true); }
DominationResult gamma_i(const PlaneGraph& g) { return gamma_i(Graph(g)); }

std::vector<std::vector<int>> minimum_independent_dominating_sets(const Graph& g, std::size_t cap) {
    const int value = gamma_i(g).value;
    const AnySolver solver = make_solver(g);
    std::vector<std::vector<int>> out;
    std::visit(
        [&](const auto& s) {
            using Mask = typename std::decay_t<decltype(s)>::Mask;
            typename std::decay_t<decltype(s)>::Search search;
            search.independent = true;
            search.mode = Mode::EnumerateAll;
            search.limit = value;
            search.cap = cap;
            s.run(search, Mask{}, Mask{});
            for (const Mask& m : search.found) out.push_back(m.members());
        },
        solver);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Probe

struct IndependentDominationProbe::Impl {
    AnySolver base;
    std::vector<Edge> edges;
};

IndependentDominationProbe::IndependentDominationProbe(const Graph& g)
    : impl_(std::make_unique<Impl>(Impl{make_solver(g), g.edges()})) {}
IndependentDominationProbe::~IndependentDominationProbe() = default;
IndependentDominationProbe::IndependentDominationProbe(IndependentDominationProbe&&) noexcept = default;
IndependentDominationProbe& IndependentDominationProbe::operator=(IndependentDominationProbe&&) noexcept = default;

bool IndependentDominationProbe::at_most(std::span<const int> removed, int k) const {
    return std::visit(
        [&](const auto& base) {
            auto s = base;
            for (int e : removed) s.remove_edge(impl_->edges.at(e).u, impl_->edges.at(e).v);
            using Mask = typename std::decay_t<decltype(s)>::Mask;
            typename std::decay_t<decltype(s)>::Search search;
            search.independent = true;
            search.mode = Mode::FirstFeasible;
            search.limit = k;
            s.run(search, Mask{}, Mask{});
            return !search.found.empty();
        },
        impl_->base);
}

}  // namespace bondagelab
