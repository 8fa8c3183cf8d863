#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bondagelab/configurations.hpp"
#include "bondagelab/domination.hpp"
#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

inline constexpr int kCertificateMaxEdges = 8;

enum class CertificatePath { Transcribed, Search };

std::string_view path_name(CertificatePath p);

/// Edge set E with gamma_i(G - E) > gamma_i(G).
struct BondageCertificate {
    ConfigKind kind = ConfigKind::A;
    std::vector<Edge> edges;
    int gamma_i_before = 0;
    int gamma_i_after = 0;
    /// The attachment-lemma hypotheses were evaluated and held (vertex kinds only).
    bool lemma2_checked = false;
    bool verified = false;
    CertificatePath path = CertificatePath::Search;
    /// Set when the transcribed construction was tried and did not verify.
    std::string fallback_reason;
};

/// `certificate kind=<k> E=<edge list> gi=<before>-><after> verified=<bool> path=<transcribed|search>`
std::string to_string(const BondageCertificate& c);

/// Re-solves gamma_i on G and G - E; true iff the certificate's numbers
/// reproduce, the increase is strict and |E| <= 8.
bool verify_certificate(const PlaneGraph& g, const BondageCertificate& c);

/// Hypotheses of the attachment lemma for center v and deletion set E.
struct AttachmentCheck {
    int center = -1;
    bool is_attachment = false;
    int gamma_i_after = 0;
    std::vector<int> independent_set;  // I', a minimum independent dominating set of G - E
    std::vector<int> members;          // D = I' & N(v)
    int s = 0;
    std::optional<int> isolated_member;  // some w in D with no neighbors in G - E
    /// Sum over w in D still adjacent to v in G - E of |N_{G-E}(w) \ N[v]|.
    int residual_sum = 0;
    /// N_G(w) & I' is empty for the isolated member.
    bool fact14 = false;

    bool s_ok() const { return s >= 2; }
    bool residual_ok() const { return residual_sum <= s - 2; }
    bool hypotheses_hold() const { return is_attachment && s_ok() && residual_ok() && isolated_member.has_value(); }
};

/// Evaluates the hypotheses over the minimum independent dominating sets of
/// G - E and reports the first one (lexicographically) that satisfies all of
/// them, or the lexicographically smallest one when none does.
/// Throws DegreeTooSmall if d(v) < 8 and NotAttachment if some edge of E
/// misses N(v).
AttachmentCheck lemma2_check(const PlaneGraph& g, const std::vector<Edge>& removed, int v);

/// Pairs (u, z) with u, z in I', uz deleted, and every G'-neighbor of u
/// dominated by I' \ {u} in G. When I' \ {u} is still independent in G it
/// dominates G, so a pair here shows gamma_i(G) < |I'|.
std::vector<std::pair<int, int>> fact15_violations(const PlaneGraph& g, const std::vector<Edge>& removed,
                                                   const std::vector<int>& independent_set);

/// Edge set of the transcribed attachment construction for a vertex
/// witness. Throws WitnessMismatch if w fails revalidation or is an edge
/// kind, NoRecipe for layouts without a construction, and
/// MissingExternalNeighbor when a named face neighbor does not exist.
std::vector<Edge> build_attachment(const PlaneGraph& g, const ConfigurationWitness& w);

/// Certificate for an a/b/c witness: the first raising subset of the edges
/// at the witness edge's endpoints, by size up to the Priddy-Wei bound,
/// trying sets without the edge itself before sets containing it.
BondageCertificate certify_edge_config(const PlaneGraph& g, const ConfigurationWitness& w, int jobs = 1);

/// Certificate for a d..h witness: the transcribed attachment if it
/// verifies, otherwise the first raising attachment of N(v) with |E| <= 8.
BondageCertificate certify_vertex_config(const PlaneGraph& g, const ConfigurationWitness& w, int jobs = 1);

/// find_configuration, then the matching route. Throws NoConfiguration or
/// SearchExhausted.
BondageCertificate certify(const PlaneGraph& g, int jobs = 1);

}  // namespace bondagelab
