#pragma once

#include <json.hpp>

#include "homind/graph.hpp"

namespace homind {

inline constexpr unsigned kDefaultSeed = 12345;

struct VerifyResult {
    bool pass = false;
    nlohmann::json report;
};

/// For every connected G up to gmax vertices (at least one edge) and every F
/// up to fmax vertices: hom(F,G_1) <= hom(F,G_0), strict exactly when the
/// certificate search succeeds, and the per-map fibered counts sum to the
/// direct counts for both lifts.
VerifyResult verify_main_dual(int gmax = 5, int fmax = 5);

/// hom(G, G_0) != hom(G, G_1) for every connected G up to nmax vertices.
VerifyResult verify_zero_iso(int nmax = 5);

/// Seeded instances with certificates onto cycles: extracted cycles are
/// chordless, have odd winding, meet the length and parity bounds, and cover
/// every fiber edge class.
VerifyResult verify_winding(int count = 50, unsigned seed = kDefaultSeed);

/// Seeded subdivision/cover instances: transporting the map across a random
/// target-edge contraction yields an oddomorphism onto the contracted graph
/// from a minor of the source.
VerifyResult verify_minor_transport(int count = 100, unsigned seed = kDefaultSeed);

/// The degree-3 pair agrees on all connected F with max degree < 3 up to
/// fmax vertices but differs on K_{1,3}; connectivity of the pair and the
/// explicit degree-2 pair are checked too.
VerifyResult verify_bounded_degree(int fmax = 7);

/// No bipartite F up to fmax vertices earns a certificate against any
/// non-bipartite connected G up to gmax vertices.
VerifyResult verify_bipartite_obstruction(int fmax = 6, int gmax = 5);

}  // namespace homind
