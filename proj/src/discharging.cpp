#include "bondagelab/discharging.hpp"

#include <algorithm>
#include <sstream>

namespace bondagelab {

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Vertex: return "vertex";
        case Scheme::Face: return "face";
        case Scheme::Balanced: return "balanced";
    }
    return "?";
}

Charge scheme_total(Scheme s) { return s == Scheme::Balanced ? Charge(-8) : Charge(-12); }

std::string Element::str() const { return (kind == Kind::Vertex ? "v" : "f") + std::to_string(id); }

Charge ChargeState::total() const {
    Charge t;
    for (const Charge& c : vertex_charge) t += c;
    for (const Charge& c : face_charge) t += c;
    return t;
}

ChargeState initial_charges(const PlaneGraph& g, Scheme scheme) {
    ChargeState st;
    st.scheme = scheme;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        st.vertex_charge.emplace_back(scheme == Scheme::Vertex ? d - 6 : scheme == Scheme::Face ? 2 * d - 6 : d - 4);
    }
    for (const Face& f : g.faces()) {
        const int l = f.degree();
        st.face_charge.emplace_back(scheme == Scheme::Vertex ? 2 * l - 6 : scheme == Scheme::Face ? l - 6 : l - 4);
    }
    return st;
}

namespace {

enum class EdgeType { ThreeThree, ThreeBig, BigBig, Other };

EdgeType edge_type(const PlaneGraph& g, int u, int v) {
    const auto [f1, f2] = g.edge_faces(u, v);
    if (f1 == f2) return EdgeType::Other;
    const int a = g.face_degree(f1);
    const int b = g.face_degree(f2);
    if (a == 3 && b == 3) return EdgeType::ThreeThree;
    if ((a == 3) != (b == 3)) return EdgeType::ThreeBig;
    return EdgeType::BigBig;
}

/// The 4+-face on edge uv when uv is of type (3, 4+).
int big_face_on(const PlaneGraph& g, int u, int v) {
    const auto [f1, f2] = g.edge_faces(u, v);
    return g.face_degree(f1) >= 4 ? f1 : f2;
}

int count_33_to_3_vertices(const PlaneGraph& g, int u) {
    int count = 0;
    for (int w : g.rotation(u))
        if (g.degree(w) == 3 && edge_type(g, u, w) == EdgeType::ThreeThree) ++count;
    return count;
}

}  // namespace

bool r3_face_pays(const PlaneGraph& g, int u, int v) {
    if (g.degree(u) != 9 || g.degree(v) != 3 || !g.adjacent(u, v)) return false;
    if (edge_type(g, u, v) != EdgeType::ThreeBig) return false;
    if (count_33_to_3_vertices(g, u) < 3) return false;

    const auto rot = g.rotation(u);
    const int d = static_cast<int>(rot.size());
    std::vector<int> big_corners;
    int three = 0;
    for (int i = 0; i < d; ++i) {
        const int fd = g.face_degree(g.corner_face(u, i));
        if (fd >= 4)
            big_corners.push_back(i);
        else if (fd == 3)
            ++three;
    }

    // Case (a): one 4+-face, whose other rim vertex w has degree >= 8.
    if (big_corners.size() == 1 && three == 8) {
        const int i = big_corners[0];
        const int a = rot[i];
        const int b = rot[(i + 1) % d];
        if (a != v && b != v) return false;
        const int w = a == v ? b : a;
        return g.degree(w) >= 8;
    }
    // Case (b): two 4+-faces sharing the edge uw, with d(w) >= 7.
    if (big_corners.size() == 2 && three == 7) {
        const int i = big_corners[0];
        const int j = big_corners[1];
        int w = -1;
        if ((i + 1) % d == j) w = rot[j];
        if ((j + 1) % d == i) w = rot[i];
        return w >= 0 && g.degree(w) >= 7;
    }
    return false;
}

ChargeState apply_rules(const PlaneGraph& g, const ChargeState& st) {
    if (st.scheme != Scheme::Vertex)
        throw Error(Errc::SchemeMismatch, "rules are defined for the vertex charging scheme only");

    std::vector<Transfer> ledger;
    auto pay = [&](Element from, int to, Charge amount, int rule) {
        ledger.push_back({from, Element::vertex(to), amount, rule});
    };

    for (int v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        const auto corners = g.corner_faces(v);
        int big = 0;
        int three = 0;
        for (int f : corners) {
            if (g.face_degree(f) >= 4) ++big;
            if (g.face_degree(f) == 3) ++three;
        }

        if (d == 3) {
            for (int u : g.rotation(v)) {
                const EdgeType t = edge_type(g, u, v);
                // R1
                if (g.degree(u) >= 9 && t == EdgeType::ThreeThree) pay(Element::vertex(u), v, 1, 1);
                // R3
                if (g.degree(u) >= 8 && t == EdgeType::ThreeBig) {
                    if (r3_face_pays(g, u, v))
                        pay(Element::face(big_face_on(g, u, v)), v, Charge(1, 2), 3);
                    else
                        pay(Element::vertex(u), v, Charge(1, 2), 3);
                }
            }
            // R2
            if (g.distinct_face_count(v) == 1) {
                pay(Element::face(corners.front()), v, 3, 2);
            } else {
                for (int f : corners) {
                    const int l = g.face_degree(f);
                    if (l == 4) pay(Element::face(f), v, 1, 2);
                    if (l >= 5) pay(Element::face(f), v, 2, 2);
                }
            }
        } else if (d == 4) {
            if (big <= 1) {
                // R4
                for (int f : corners) {
                    const int l = g.face_degree(f);
                    if (l == 4) pay(Element::face(f), v, 1, 4);
                    if (l >= 5) pay(Element::face(f), v, 2, 4);
                }
                for (int u : g.rotation(v))
                    if (g.degree(u) >= 8 && edge_type(g, u, v) == EdgeType::ThreeThree)
                        pay(Element::vertex(u), v, Charge(1, 2), 4);
            } else {
                // R5
                for (int f : corners)
                    if (g.face_degree(f) >= 4) pay(Element::face(f), v, Charge(2, big), 5);
            }
        } else if (d == 5) {
            // R6
            if (three == 5)
                for (int u : g.rotation(v))
                    if (g.degree(u) >= 7) pay(Element::vertex(u), v, Charge(1, 5), 6);
            // R7
            if (big >= 1)
                for (int f : corners)
                    if (g.face_degree(f) >= 4) pay(Element::face(f), v, Charge(1, big), 7);
        }
    }

    std::stable_sort(ledger.begin(), ledger.end(), [](const Transfer& a, const Transfer& b) {
        if (a.rule != b.rule) return a.rule < b.rule;
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    });
    return replay(st, ledger);
}

ChargeState replay(const ChargeState& initial, const std::vector<Transfer>& ledger) {
    ChargeState out = initial;
    for (const Transfer& t : ledger) {
        out.at(t.source) -= t.amount;
        out.at(t.target) += t.amount;
    }
    out.ledger.insert(out.ledger.end(), ledger.begin(), ledger.end());
    return out;
}

AuditReport audit(const ChargeState& st) {
    AuditReport r;
    r.scheme = st.scheme;
    for (int v = 0; v < static_cast<int>(st.vertex_charge.size()); ++v)
        if (st.vertex_charge[v].is_negative()) r.negatives.emplace_back(Element::vertex(v), st.vertex_charge[v]);
    for (int f = 0; f < static_cast<int>(st.face_charge.size()); ++f)
        if (st.face_charge[f].is_negative()) r.negatives.emplace_back(Element::face(f), st.face_charge[f]);
    r.total = st.total();
    r.expected_total = scheme_total(st.scheme);
    for (const Transfer& t : st.ledger) r.per_rule.at(t.rule - 1) += t.amount;
    r.ledger = st.ledger;
    return r;
}

std::string AuditReport::text(bool with_ledger) const {
    std::ostringstream out;
    for (const auto& [e, c] : negatives) out << "neg " << e.str() << ' ' << c << '\n';
    out << "total " << total << '\n';
    if (!conserved()) out << "conservation-violation expected " << expected_total << '\n';
    out << "ledger " << ledger.size() << " transfers\n";
    if (with_ledger) {
        for (int i = 0; i < 7; ++i) out << "rule R" << i + 1 << ' ' << per_rule[i] << '\n';
        for (const Transfer& t : ledger)
            out << "transfer R" << t.rule << ' ' << t.source.str() << " -> " << t.target.str() << ' ' << t.amount
                << '\n';
    }
    return out.str();
}

std::vector<int> fact10_violations(const PlaneGraph& g) {
    std::vector<int> bad;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 3 || g.distinct_face_count(v) != 1) continue;
        const auto rot = g.rotation(v);
        if (!std::all_of(rot.begin(), rot.end(), [&](int u) { return g.degree(u) >= 7; })) continue;
        if (g.face_degree(g.corner_face(v, 0)) < 15) bad.push_back(v);
    }
    return bad;
}

}  // namespace bondagelab
