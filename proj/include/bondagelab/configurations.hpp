#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

enum class ConfigKind { A, B, C, DI, DII, EIAlpha, EIBeta, EIDelta, EII, F, G, H };

std::string_view kind_name(ConfigKind k);
std::optional<ConfigKind> parse_kind(std::string_view name);
bool is_edge_kind(ConfigKind k);

/// A located unavoidable configuration.
///
/// Edge kinds (a, b, c) fill `edge` and put the two incident face degrees in
/// `face_pattern`. Vertex kinds (d..h) fill `center` and the labeled rim
/// u_1..u_d, where u_j = rotation(center)[offset + orientation * (j-1)]. The
/// labeled face f_j lies between u_j and u_{j+1} (u_{d+1} = u_1).
struct ConfigurationWitness {
    ConfigKind kind = ConfigKind::A;
    int center = -1;
    std::optional<Edge> edge;
    std::vector<int> rim;
    std::vector<int> independent_set;  // I, in label order
    std::vector<int> face_pattern;     // degrees of f_1..f_d
    std::vector<int> rim_faces;        // face ids of f_1..f_d
    int offset = 0;
    int orientation = 1;
    /// Index of the matched layout within the kind. Layout 0 is the one the
    /// attachment constructions are written for.
    int layout = 0;

    /// u_j for 1-based j.
    int u(int j) const { return rim.at(j - 1); }
    /// f_j for 1-based j.
    int f(int j) const { return rim_faces.at(j - 1); }
};

/// A clause slot: rim position (1-based) whose vertex belongs to I with
/// degree in [min_degree, max_degree].
struct TemplateSlot {
    int position = 0;
    int min_degree = 0;
    int max_degree = 0;
};

/// One concrete layout of a vertex clause. `faces` has one character per
/// labeled face: '3' for a 3-face, '+' for a 4+-face, '*' for either; the
/// counts, when non-negative, constrain the totals.
struct VertexTemplate {
    ConfigKind kind;
    int degree;
    std::string faces;
    std::vector<TemplateSlot> slots;
    int three_faces = -1;
    int big_faces = -1;
    bool has_construction = false;
};

/// Layouts of `kind` in matching order.
const std::vector<VertexTemplate>& vertex_templates(ConfigKind kind);

/// Every edge satisfying (a), (b) or (c), labeled with the first of a, b, c
/// that holds; ascending by edge index.
std::vector<ConfigurationWitness> detect_edge_configs(const PlaneGraph& g);

/// One witness per (vertex, clause) satisfied; ordered by vertex, then kind.
std::vector<ConfigurationWitness> detect_vertex_configs(const PlaneGraph& g);

/// The first witness for `kind` at vertex v, if any.
std::optional<ConfigurationWitness> match_vertex_kind(const PlaneGraph& g, int v, ConfigKind kind);

/// First witness in scan order a, b, c, d_i, ..., h (edge kinds by edge
/// index, vertex kinds by vertex index); none only if no detector fires.
std::optional<ConfigurationWitness> find_configuration(const PlaneGraph& g);

/// Re-derives the clause predicate for w from g alone.
bool validate(const PlaneGraph& g, const ConfigurationWitness& w);

/// `config <kind> center=<id> I=<ids> faces=<degree sequence>`; edge kinds
/// print the center as `u-v`.
std::string to_string(const ConfigurationWitness& w);

}  // namespace bondagelab
