#pragma once

#include <vector>

#include "homind/graph.hpp"
#include "homind/oddo.hpp"

namespace homind {

/// Walk in a host graph; when closed, first and last vertices coincide.
struct Walk {
    std::vector<int> vertices;
    bool closed = false;
};

/// Signed length of a walk with respect to a homomorphism psi onto the
/// k-cycle 0..k-1: each step counts +1 when the image advances by one mod k
/// and -1 when it retreats. Not reduced mod k. Throws on steps that are not
/// edges of F or whose images are not adjacent in the cycle.
int psi_length(const Graph& F, const Walk& walk, const VertexMap& psi, int k);

/// Closed walk without repeated edges, together with its winding number m
/// (= psi-length / k) and the per-fiber step tallies: w_plus[i] counts steps
/// from fiber i to fiber i+1, w_minus[i] steps from fiber i+1 to fiber i.
struct TourWitness {
    Walk walk;
    int winding = 0;
    std::vector<int> w_plus, w_minus;
};

/// Status-walk tour construction: start at the lowest odd vertex of fiber 0,
/// continue in the same direction at vertices whose status is odd (then mark
/// them even), turn around at even-status vertices, always taking the unused
/// edge to the lowest-indexed eligible neighbor; stop on returning to the
/// start along a fiber (k-1)->0 edge. Requires psi to be an oddomorphism
/// onto the k-cycle. The result never repeats an edge and has nonzero
/// psi-length.
TourWitness find_tour_nonzero(const Graph& F, const VertexMap& psi, int k);

/// Tour with odd winding number: extract tours and, whenever the winding is
/// even, delete the tour's edges (the restriction stays an oddomorphism) and
/// repeat on the smaller graph.
TourWitness find_odd_winding_tour(const Graph& F, const VertexMap& psi, int k);

struct ChordlessCycle {
    std::vector<int> vertices;  // cyclic order, not closed
    int winding = 0;
};

/// From a certificate onto the k-cycle, a chordless cycle of F with odd
/// winding number; its length is at least k and has the parity of k, and it
/// uses an edge between fibers i and i+1 for every i. Works by extracting an
/// odd-winding tour inside the connected witness and then shortening: split
/// at repeated vertices, then split at chords, always keeping a piece of odd
/// winding.
ChordlessCycle extract_chordless_odd_cycle(const Graph& F, const OddoCertificate& cert, int k);

/// A template R with per-vertex chordlessness flags and length lower bounds
/// (each at least 3, matched in parity); cycles assigned to R-adjacent
/// template vertices must be vertex-disjoint.
struct CycleStructureSpec {
    Graph R;
    std::vector<int> chordless;   // 0/1 per vertex of R
    std::vector<int> min_length;  // >= 3 per vertex of R
};

struct CycleStructureWitness {
    bool found = false;
    std::vector<std::vector<int>> cycles;  // one per vertex of R when found
};

/// Backtracking search for distinct cycles C_u of G, one per vertex of R,
/// with length >= min_length[u] of the same parity, chordless where flagged,
/// and vertex-disjoint across edges of R. Desk scale: guarded on |V(G)|.
CycleStructureWitness has_cycle_structure(const Graph& G, const CycleStructureSpec& spec, int guard = 12);

}  // namespace homind
