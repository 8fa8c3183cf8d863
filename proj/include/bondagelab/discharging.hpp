#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "bondagelab/plane_graph.hpp"
#include "bondagelab/rational.hpp"

namespace bondagelab {

using Charge = Rational;

enum class Scheme { Vertex, Face, Balanced };

std::string_view scheme_name(Scheme s);
/// Total charge each scheme sums to on a connected plane graph.
Charge scheme_total(Scheme s);

struct Element {
    enum class Kind { Vertex, Face };
    Kind kind = Kind::Vertex;
    int id = 0;

    static Element vertex(int v) { return {Kind::Vertex, v}; }
    static Element face(int f) { return {Kind::Face, f}; }
    /// "v3" / "f7".
    std::string str() const;

    friend auto operator<=>(const Element&, const Element&) = default;
};

struct Transfer {
    Element source;
    Element target;
    Charge amount;
    int rule = 0;  // 1..7
};

struct ChargeState {
    Scheme scheme = Scheme::Vertex;
    std::vector<Charge> vertex_charge;
    std::vector<Charge> face_charge;
    std::vector<Transfer> ledger;

    Charge total() const;
    Charge& at(const Element& e) { return e.kind == Element::Kind::Vertex ? vertex_charge.at(e.id) : face_charge.at(e.id); }
    const Charge& at(const Element& e) const {
        return e.kind == Element::Kind::Vertex ? vertex_charge.at(e.id) : face_charge.at(e.id);
    }
    friend bool operator==(const ChargeState& a, const ChargeState& b) {
        return a.scheme == b.scheme && a.vertex_charge == b.vertex_charge && a.face_charge == b.face_charge;
    }
};

/// vertex: d(v)-6 and 2l(f)-6; face: 2d(v)-6 and l(f)-6; balanced: d(v)-4 and l(f)-4.
ChargeState initial_charges(const PlaneGraph& g, Scheme scheme);

/// Applies R1..R7 simultaneously to a vertex-scheme state. Every rule reads
/// the graph only, never the current charges, so the result is independent
/// of evaluation order. Ledger is sorted by rule, then source, then target.
ChargeState apply_rules(const PlaneGraph& g, const ChargeState& st);

/// Replays `ledger` on top of `initial`.
ChargeState replay(const ChargeState& initial, const std::vector<Transfer>& ledger);

/// True when the 9-vertex u falls into case (a) or (b) of R3 with respect to
/// its 3-neighbor v, so that v is paid by the 4+-face on uv instead of by u.
bool r3_face_pays(const PlaneGraph& g, int u, int v);

struct AuditReport {
    Scheme scheme = Scheme::Vertex;
    std::vector<std::pair<Element, Charge>> negatives;
    Charge total;
    Charge expected_total;
    std::array<Charge, 7> per_rule{};
    std::vector<Transfer> ledger;

    bool conserved() const { return total == expected_total; }
    std::size_t transfers() const { return ledger.size(); }
    /// `neg <elem> <p/q>` lines, `total <p/q>`, `ledger <k> transfers`; with
    /// `with_ledger`, also per-rule sums and one line per transfer.
    std::string text(bool with_ledger = false) const;
};

AuditReport audit(const ChargeState& st);

/// 3-vertices with a single incident face and all neighbors of degree >= 7
/// whose face has length < 15. Empty on every plane graph.
std::vector<int> fact10_violations(const PlaneGraph& g);

}  // namespace bondagelab
