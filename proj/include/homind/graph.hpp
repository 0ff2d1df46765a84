#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homind/errors.hpp"

namespace homind {

/// Simple undirected graph on vertices 0..n-1 with optional per-vertex loops.
///
/// Adjacency is stored as bit-packed rows; the neighbor row of v contains the
/// self bit exactly when v carries a loop, so N(v) includes v for looped
/// vertices. Edges are indexed canonically: all pairs (u,v) with u <= v in
/// lexicographic order, loops appearing as (v,v).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v);
    void add_loop(int v);

    bool adjacent(int u, int v) const;
    bool has_loop(int v) const;
    bool has_loops() const;

    /// Number of neighbors distinct from v (loops do not count).
    int degree(int v) const;
    int max_degree() const;

    /// Neighbor bit row of v; includes the self bit iff v has a loop.
    const std::uint64_t* neighbors(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
    bool neighbor_bit(int v, int u) const { return (neighbors(v)[u >> 6] >> (u & 63)) & 1u; }

    /// Canonical edge list: pairs (u,v), u <= v, lexicographic; loops as (v,v).
    const std::vector<std::pair<int, int>>& edges() const;
    int edge_count() const { return static_cast<int>(edges().size()); }
    int simple_edge_count() const;
    /// Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;
    /// E(v): indices of non-loop edges incident to v, ascending.
    std::vector<int> incident_edges(int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
    mutable std::vector<std::pair<int, int>> edge_cache_;
    mutable bool edge_cache_valid_ = false;
};

/// Total map V(source) -> V(target). The homomorphism property is checked by
/// operations, never assumed: oddism search needs non-homomorphism maps.
struct VertexMap {
    std::vector<int> to;

    int operator()(int a) const { return to[a]; }
    int size() const { return static_cast<int>(to.size()); }
    /// Fibers psi^{-1}(0), ..., psi^{-1}(target_n - 1).
    std::vector<std::vector<int>> fibers(int target_n) const;
};

bool is_homomorphism(const Graph& source, const VertexMap& psi, const Graph& target);

// --- I/O ------------------------------------------------------------------

/// graph6 short form, n <= 62. Errors name the offending byte offset.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

/// Edge-list text: "n m\n" then one "u v" or "loop v" line per indexed edge.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Reads graph6 or edge-list format, depending on whether the first line has
/// a space in it.
Graph parse_graph_auto(const std::string& text);

// --- Generators -----------------------------------------------------------

Graph make_cycle(int k);
Graph make_path(int n);
Graph make_star(int d);
Graph make_complete(int n);
Graph make_empty(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

// --- Decision procedures --------------------------------------------------

/// Isomorphism with witness: color-refinement preprocessing plus backtracking
/// on refined cells. Witness maps V(g) -> V(h) and preserves adjacency and
/// loops both ways.
std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Isomorphism-invariant canonical key; equal keys iff isomorphic.
std::string canonical_key(const Graph& g);

/// True iff minor is obtainable from g by vertex/edge deletions and edge
/// contractions. Exponential branch-and-memoize; guarded at |V(g)| <= 12.
bool has_minor(const Graph& g, const Graph& minor, int guard = 12);

// --- Structure queries ----------------------------------------------------

struct StructureReport {
    std::vector<std::vector<int>> components;
    bool bipartite = false;
    std::vector<int> two_coloring;           // valid iff bipartite
    int max_degree = 0;
    int circumference = 0;                   // 0 when acyclic
    std::vector<int> longest_cycle;          // witness, empty when acyclic
    bool odd_hole = false;
    std::vector<int> odd_hole_witness;       // induced odd cycle, length >= 5
    bool planar = false;
};

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::optional<std::vector<int>> bipartition(const Graph& g);
/// Longest cycle as a vertex sequence (not closed); empty when acyclic.
std::vector<int> longest_cycle(const Graph& g, int guard = 16);
/// Induced cycle of odd length >= 5, if any.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int guard = 16);
/// Center vertex of an induced K_{1,d}, with its d leaves.
std::optional<std::vector<int>> find_induced_star(const Graph& g, int d);
/// Euler-bound shortcut then brute K_5 / K_{3,3} minor search.
bool is_planar(const Graph& g, int guard = 16);
int chromatic_number(const Graph& g);

StructureReport structure_queries(const Graph& g, int guard = 16);

// --- Exhaustive enumeration -----------------------------------------------

/// One representative per isomorphism class with <= n_max vertices, in a
/// deterministic order (by vertex count, then canonical key). The predicate
/// filters output only; intermediate graphs are always explored.
void enumerate_graphs(int n_max, bool connected_only,
                      const std::function<bool(const Graph&)>& predicate,
                      const std::function<void(const Graph&)>& yield,
                      int guard = 8);
std::vector<Graph> enumerate_graphs(int n_max, bool connected_only, int guard = 8);

/// All loop-allowed isomorphism classes with <= n_max vertices (desk scale).
std::vector<Graph> enumerate_loop_graphs(int n_max, int guard = 5);

}  // namespace homind
