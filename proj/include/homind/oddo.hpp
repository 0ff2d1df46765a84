#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homind/graph.hpp"

namespace homind {

enum class Parity { odd, even, neither };

/// Per-vertex parity of F's vertices with respect to psi, considering only
/// the given subgraph edges (indices into F.edges()). A vertex is odd/even
/// when its subgraph-neighbor count in every fiber over a target-neighbor of
/// its image has that parity; a vertex with no constraining fiber counts as
/// even. Loops put the vertex into its own neighborhood but never into a
/// counted fiber (the target is loopless there), so they cannot change tags.
std::vector<Parity> classify_parity(const Graph& F, const std::vector<int>& witness_edges, const VertexMap& psi,
                                    const Graph& G);

/// Homomorphism, all vertices odd or even, and every fiber holds an odd
/// number of odd vertices.
bool is_oddomorphism(const Graph& F, const VertexMap& psi, const Graph& G);

/// Same parity conditions for an arbitrary vertex map (no homomorphism
/// requirement); only edges of F mapped onto edges of G matter.
bool is_oddism(const Graph& F, const VertexMap& psi, const Graph& G);

/// Transferable proof that hom counts over the two lifts of G differ: psi
/// together with the dual-solution supports. The witness subgraph has vertex
/// set V(F) and edge set witness_edges; odd_set lists its odd vertices. The
/// connected witness is the component carrying the parity obstruction.
struct OddoCertificate {
    VertexMap psi;
    std::vector<int> odd_set;
    std::vector<int> witness_edges;  // indices into F.edges()
    std::vector<int> connected_witness_vertices;
    std::vector<int> connected_witness_edges;
    bool oddism = false;  // psi need not be a homomorphism
};

/// Searches Hom(F,G) and solves one dual system per map; a solution decodes
/// directly into a certificate. Returns none iff the two lifts of G receive
/// equally many homomorphisms from F. G must be connected with an edge.
std::optional<OddoCertificate> find_weak_oddo(const Graph& F, const Graph& G, long limit = 5000000);

/// The loop-setting analog: iterates all |V(G)|^|V(F)| functions, with
/// adjacency rows only for edges mapped onto edges of G.
std::optional<OddoCertificate> find_weak_oddism(const Graph& F, const Graph& G, long limit = 5000000);

/// Empty string when the certificate proves a weak oddomorphism (or weak
/// oddism) F -> G; otherwise the first violated clause.
std::string check_certificate(const Graph& F, const Graph& G, const OddoCertificate& cert);

/// Serialization embeds both graphs so a certificate file is self-contained.
nlohmann::json certificate_to_json(const Graph& F, const Graph& G, const OddoCertificate& cert);
struct CertificateFile {
    Graph F, G;
    OddoCertificate cert;
};
CertificateFile certificate_from_json(const nlohmann::json& j);

/// Odd vertices of psi on all of F; empty optional when some vertex is
/// neither odd nor even.
std::optional<std::vector<int>> odd_vertex_set(const Graph& F, const VertexMap& psi, const Graph& G);

struct ComposedOddo {
    VertexMap psi;
    std::vector<int> odd_set;
};

/// Composition of oddomorphisms F -> G -> H; odd vertices are those odd for
/// the first map whose image is odd for the second.
ComposedOddo compose_oddo(const Graph& F, const VertexMap& psi1, const Graph& G, const VertexMap& psi2, const Graph& H);

struct RestrictedOddo {
    Graph Fsub;
    std::vector<int> f_vertices;  // original ids, ascending
    Graph Gsub;
    std::vector<int> g_vertices;  // original ids, ascending
    VertexMap psi;                // Fsub -> Gsub
};

/// Preimage restriction of an oddomorphism to a subgraph of the target:
/// keeps the fibers over the subgraph vertices and the edges of F whose
/// images lie in the subgraph.
RestrictedOddo restrict_oddo(const Graph& F, const VertexMap& psi, const Graph& G, const std::vector<int>& g_vertices,
                             const std::vector<std::pair<int, int>>& g_edges);

struct MinorOddo {
    Graph Fprime;
    Graph Gprime;                            // G with uv contracted; merged vertex is last
    VertexMap psi;                           // Fprime -> Gprime
    std::vector<std::vector<int>> components;  // contracted vertex classes of F, by ascending minimum
};

/// Transports an oddomorphism across the contraction of target edge uv:
/// drops duplicate edges on the v side, contracts the fiber-bridging
/// components, and keeps only odd-multiplicity edges to the merged vertices.
MinorOddo minor_oddo(const Graph& F, const VertexMap& psi, const Graph& G, int u, int v);

/// Replaces edge i of G by a path of lengths[i] (odd) edges; the fold-back
/// map is an oddomorphism with the original vertices odd.
std::pair<Graph, VertexMap> odd_subdivision(const Graph& G, const std::vector<int>& lengths);

/// Voltage cover with k (odd) sheets: vertex (v,i) is v*k+i, edge uv with
/// voltage pi joins (u,i) to (v,pi(i)). The projection is an oddomorphism
/// with every vertex odd.
std::pair<Graph, VertexMap> odd_cover(const Graph& G, int k, const std::vector<std::vector<int>>& voltages);

}  // namespace homind
