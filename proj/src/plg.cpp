#include "bondagelab/plg.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace bondagelab {

namespace {

[[noreturn]] void fail(Errc code, int line, const std::string& what) {
    throw Error(code, "line " + std::to_string(line) + ": " + what);
}

std::optional<int> to_int(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

}  // namespace

PlaneGraph read_plg(std::istream& in) {
    std::string raw;
    int lineno = 0;
    int n = -1;
    std::vector<std::vector<int>> rot;
    std::vector<int> defined_at;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;

        if (n < 0) {
            std::string count;
            if (head != "planegraph" || !(ls >> count)) fail(Errc::ParseError, lineno, "expected 'planegraph <n>'");
            auto parsed = to_int(count);
            if (!parsed || *parsed <= 0) fail(Errc::ParseError, lineno, "bad vertex count '" + count + "'");
            std::string extra;
            if (ls >> extra) fail(Errc::ParseError, lineno, "trailing token '" + extra + "'");
            n = *parsed;
            rot.assign(n, {});
            defined_at.assign(n, 0);
            continue;
        }

        if (head != "v") fail(Errc::ParseError, lineno, "expected 'v <id>: ...'");
        std::string idtok;
        if (!(ls >> idtok) || idtok.empty()) fail(Errc::ParseError, lineno, "missing vertex id");
        if (idtok.back() == ':') {
            idtok.pop_back();
        } else {
            std::string colon;
            if (!(ls >> colon) || colon != ":") fail(Errc::ParseError, lineno, "missing ':' after vertex id");
        }
        auto id = to_int(idtok);
        if (!id) fail(Errc::ParseError, lineno, "bad vertex id '" + idtok + "'");
        if (*id < 0 || *id >= n) fail(Errc::InvalidId, lineno, "vertex id " + idtok + " out of range");
        if (defined_at[*id]) fail(Errc::ParseError, lineno, "vertex " + idtok + " defined twice");
        defined_at[*id] = lineno;

        std::string tok;
        while (ls >> tok) {
            auto u = to_int(tok);
            if (!u) fail(Errc::ParseError, lineno, "bad neighbor id '" + tok + "'");
            rot[*id].push_back(*u);
        }
    }
    if (n < 0) fail(Errc::ParseError, lineno, "missing 'planegraph <n>' header");
    for (int v = 0; v < n; ++v)
        if (!defined_at[v]) fail(Errc::ParseError, lineno, "vertex " + std::to_string(v) + " has no line");

    try {
        return PlaneGraph::build(std::move(rot));
    } catch (const Error& e) {
        const int line = e.vertex() >= 0 ? defined_at[e.vertex()] : lineno;
        throw Error(e.code(), "line " + std::to_string(line) + ": " +
                                  std::string(e.what()).substr(errc_name(e.code()).size() + 2));
    }
}

PlaneGraph read_plg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    return read_plg(in);
}

PlaneGraph parse_plg(const std::string& text) {
    std::istringstream in(text);
    return read_plg(in);
}

void write_plg(std::ostream& out, const PlaneGraph& g) {
    out << "planegraph " << g.num_vertices() << '\n';
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "v " << v << ':';
        for (int u : g.rotation(v)) out << ' ' << u;
        out << '\n';
    }
}

std::string to_plg(const PlaneGraph& g) {
    std::ostringstream out;
    write_plg(out, g);
    return out.str();
}

}  // namespace bondagelab
