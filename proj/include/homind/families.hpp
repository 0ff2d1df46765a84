#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homind/graph.hpp"
#include "homind/homcount.hpp"

namespace homind {

/// Decidable graph family with declared closure metadata. The flags are
/// claims about the family, spot-checked by tests, not enforced here.
struct FamilyPredicate {
    std::string name;
    std::function<bool(const Graph&)> member;
    bool union_closed = false;
    bool component_closed = false;
    bool minor_closed = false;
    bool experimental = false;  // membership test relies on guarded heuristics
};

/// Specs understood by make_predicate:
///   all                 every graph
///   maxdeg:d            maximum degree <= d
///   forests             acyclic, no loops
///   treewidth2          no K_4 minor
///   circumference:k     no cycle longer than k
///   no-odd-holes        no induced odd cycle of length >= 5
///   no-induced-star:d   no induced K_{1,d}
///   planar              planar (experimental: desk-scale minor test)
///   cliques:a,b,...[+]  disjoint unions of complete graphs K_n, n in the
///                       listed set; a trailing + adds every larger order
///   minor-free:<g6>     graphs with no minor isomorphic to the given graph
///   minors-of:<g6>      graphs that are minors of the given graph
FamilyPredicate make_predicate(const std::string& spec);
std::vector<std::string> builtin_predicate_names();

struct DistinguishReport {
    Graph H, Hprime;
    std::string predicate;
    int n_max = 0;
    bool distinguished = false;
    std::optional<Graph> counterexample;  // family member with differing counts
    HomCount count_H = 0, count_Hprime = 0;
};

/// Compares hom counts into H and H' from every family member up to n_max
/// vertices, one representative per isomorphism class, in enumeration order.
/// Connected members suffice for component-closed, union-closed families
/// (counts multiply over components); for other predicates pass full = true
/// to enumerate disconnected members too, otherwise this refuses.
DistinguishReport indistinguishable_up_to(const Graph& H, const Graph& Hprime, const FamilyPredicate& pred, int n_max,
                                          bool full = false);

struct ProbeReport {
    Graph H, Hprime;  // G_0 and G_1 padded with a clique
    int clique_order = 0;
    DistinguishReport family_report;   // family members up to n_max agree?
    HomCount homG_H = 0, homG_Hprime = 0;
    bool target_differs = false;       // hom(G,H) != hom(G,H')
};

/// For connected G outside the family: pads the two lifts with K_r,
/// r = chi(G), so both targets admit homomorphisms from G, then checks that
/// family members up to n_max cannot tell the pair apart while G itself can.
ProbeReport hd_closure_probe(const Graph& G, const FamilyPredicate& pred, int n_max);

/// True iff the two graphs have equal closed-walk counts (cycle hom counts)
/// for all lengths 3..L.
bool cospectral_check(const Graph& H, const Graph& Hprime, int L);

/// Disjoint unions preserve family-indistinguishability: verifies both input
/// pairs agree up to n_max (refusing otherwise), then reports whether
/// H1 u H2 and H1' u H2' agree up to n_max. Requires a component-closed
/// predicate.
bool union_lemma_check(const Graph& H1, const Graph& H1prime, const Graph& H2, const Graph& H2prime,
                       const FamilyPredicate& pred, int n_max);

}  // namespace homind
