#pragma once

#include <utility>
#include <vector>

#include "homind/graph.hpp"

namespace homind {

/// Vertex of a lifted graph: a head vertex of the base graph plus a tail set
/// of incident base-edge indices with prescribed parity.
struct GUVertex {
    int head = 0;
    std::vector<int> tail;  // ascending edge indices of the base graph

    bool tail_has(int edge) const;
    bool operator==(const GUVertex&) const = default;
};

/// A lifted graph together with its vertex labels and the projection
/// (v,S) -> v onto the base graph.
struct LabeledGraph {
    Graph graph;
    Graph base;
    std::vector<GUVertex> labels;
    VertexMap projection;

    /// Vertex id of (head, tail), or -1.
    int vertex_id(int head, const std::vector<int>& tail) const;
};

/// The lift on pairs (v, S), S subset of E(v), |S| = |U on v| mod 2, with
/// (v,S) ~ (u,T) iff uv is a base edge not in the symmetric difference of S
/// and T. Vertex ids follow (head, tail) lexicographic order; tails are
/// compared as sorted edge-index sequences. Any fixed order gives the same
/// graph up to isomorphism.
LabeledGraph build_GU(const Graph& G, const std::vector<int>& U, int guard = 4096);

/// (lift over the empty set, lift over {0}). For connected G these are the
/// only two isomorphism classes over all U.
std::pair<LabeledGraph, LabeledGraph> build_G01(const Graph& G, int guard = 4096);

/// Explicit isomorphism lift(G,U) -> lift(G, U xor {u,v}) for a base edge uv:
/// (w,S) -> (w, S xor {uv}) for w in {u,v}, identity tail otherwise.
VertexMap shift_isomorphism(const Graph& G, const std::vector<int>& U, int u, int v, int guard = 4096);

/// Simplified star lift: vertex set [d] plus all S subset of [d] with
/// |S| = i mod 2; j ~ S iff j not in S. Isomorphic to the lift of K_{1,d}
/// over a parity-i set. Vertices 0..d-1 are the elements, then subsets in
/// ascending bitmask order.
Graph build_star_simplified(int d, int i);

/// Loop variant: same vertex set as build_GU; (v,S) ~ (u,T) iff uv is not a
/// base edge, or it is and lies outside the symmetric difference; every
/// vertex carries a loop. Same-head vertices form cliques.
LabeledGraph build_tilde_GU(const Graph& G, const std::vector<int>& U, int guard = 4096);

}  // namespace homind
