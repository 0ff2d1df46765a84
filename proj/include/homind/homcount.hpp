#pragma once

#include <gmpxx.h>

#include <vector>

#include "homind/construct.hpp"
#include "homind/gf2.hpp"
#include "homind/graph.hpp"

namespace homind {

/// Exact homomorphism counts; fibered counts are powers of two that overflow
/// 64 bits quickly, hence arbitrary precision.
using HomCount = mpz_class;

/// Number of adjacency-preserving maps F -> G. Loops allowed on both sides: a
/// loop (or an edge collapsed by the map) requires a loop at the image.
/// Factorizes over components of F; backtracking visits each component in BFS
/// order so every new vertex is pruned by a mapped neighbor.
HomCount hom_count(const Graph& F, const Graph& G, int f_guard = 10, int g_guard = 64);

/// All homomorphisms, duplicate-free. Throws GuardExceeded naming the count
/// found so far once more than limit maps exist.
std::vector<VertexMap> hom_enumerate(const Graph& F, const Graph& G, long limit);

/// The linear system over Z_2 whose solutions are the lifts of psi: one
/// parity row per vertex of F (right side: whether its image is in U), one
/// agreement row per edge of F on the shared base edge. Variables are the
/// pairs (a, e), a in V(F), e in E(psi(a)), in (a, e) lexicographic order.
struct FiberedSystem {
    VertexMap psi;
    Gf2Matrix A;     // rows: V(F)
    Gf2Matrix B;     // rows: E(F)
    Gf2Vector chi;   // right side of the A block
    std::vector<std::pair<int, int>> variables;

    Gf2System stacked() const;
    int var_index(int a, int e) const;
};

FiberedSystem build_fibered_system(const Graph& F, const Graph& G, const std::vector<int>& U, const VertexMap& psi);

/// |{phi in Hom(F, lift(G,U)) : projection of phi = psi}| — zero when the
/// system is unsolvable, else 2^(variables - rank).
HomCount hom_count_fibered(const Graph& F, const Graph& G, const std::vector<int>& U, const VertexMap& psi);

/// hom(C_k, G) for k = 3..L via exact traces of adjacency-matrix powers.
std::vector<HomCount> hom_vector_cycles(const Graph& G, int L, int guard = 16);

}  // namespace homind
