#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncsym/config.hpp"
#include "ncsym/graph.hpp"
#include "ncsym/nc_expr.hpp"

namespace ncsym {

enum class YRoute { Stable, DelCon, Subsets, BrokenCircuit };

std::string route_name(YRoute r);
YRoute route_from_name(const std::string& name);

// Chromatic symmetric function in noncommuting variables, with the route
// that produced it.
struct YResult {
    LabeledMultigraph graph;
    NCExpr expr;
    YRoute route;
};

// Sum of m_pi over the stable partitions of g (M basis); zero if g has a
// loop.
NCExpr y_stable(const LabeledMultigraph& g, const RunConfig& cfg = default_config());

// Deletion-contraction on the last non-loop edge, inducing the contraction
// back up at the edge's endpoints (P basis).  Memoized per call on the
// degree-plus-edge-multiset key.
NCExpr y_delcon(const LabeledMultigraph& g, const RunConfig& cfg = default_config());

// Same recursion, but relabels so the pivot edge becomes {d-1, d}, recurses,
// and unrelabels.  Kept as a cross-check of the direct route.
NCExpr y_delcon_relabel(const LabeledMultigraph& g, const RunConfig& cfg = default_config());

// Signed sum of p_{pi(S)} over all edge subsets S (P basis).
NCExpr y_subsets_p(const LabeledMultigraph& g, const RunConfig& cfg = default_config());

// Same sum restricted to the broken-circuit complex (P basis).
NCExpr y_broken_circuit_p(const LabeledMultigraph& g, const RunConfig& cfg = default_config());

YResult compute_y(const LabeledMultigraph& g, Basis basis, YRoute route,
                  const RunConfig& cfg = default_config());

// Commutative image of Y_g in the requested basis.
CExpr x_commutative(const LabeledMultigraph& g, Basis basis = Basis::E,
                    const RunConfig& cfg = default_config());

// Specialization x_1 = ... = x_n = 1 of Y_g, as a polynomial in n.
UniPoly chromatic_polynomial(const LabeledMultigraph& g, const RunConfig& cfg = default_config());

// (d-1)! times the coefficient of e_{[d]} in the elementary expansion of
// Y_g.  Equals the number of acyclic orientations with unique sink at any
// chosen vertex.
long long unique_sink_count_via_e(const LabeledMultigraph& g,
                                  const RunConfig& cfg = default_config());

// j -> sum of the commutative e-coefficients c_lambda with length(lambda)=j.
// Equals the count of acyclic orientations with exactly j sinks.
std::map<int, Rat> sink_distribution_via_e(const LabeledMultigraph& g,
                                           const RunConfig& cfg = default_config());

// Elementary expansion of Y_g amalgamated by congruence at the marked
// element; marked = 0 selects the last vertex.
EClassExpr e_class_expansion(const LabeledMultigraph& g, int marked = 0,
                             const RunConfig& cfg = default_config());
bool is_e_class_positive(const LabeledMultigraph& g, int marked = 0,
                         const RunConfig& cfg = default_config());

struct PositivityWitness {
    Perm relabeling;
    int marked;
};

// Outcome of the budgeted witness search; exhaustive means every labeling
// was tried, so an empty witness is a definitive negative.
struct PositivitySearch {
    std::optional<PositivityWitness> witness;
    long long tried = 0;
    bool exhaustive = false;
};

// Try relabelings in lexicographic order (all d! when the budget allows) and
// every marked index, looking for a nonnegative class expansion.
PositivitySearch search_positive_labeling(const LabeledMultigraph& g, long long budget = -1,
                                          const RunConfig& cfg = default_config());

// Class expansion of Y for the complete graph minus the edge {d-1, d}:
// (d-2)/(d-1) on the one-block class plus 1/(d-1) on the class with d alone.
EClassExpr closed_form_kd_minus_e(int d);

// Commutative counterpart: d(d-2)(d-2)! e_(d) + (d-2)! e_(d-1,1).
CExpr closed_form_x_kd_minus_e(int d);

// Checks that the cycle classes are the path classes with the marked block
// grown by one, computing both sides from scratch.
bool path_cycle_relation_check(int d, const RunConfig& cfg = default_config());

// Class expansion of Y for g with a clique on m vertices glued at the last
// vertex, computed from the class expansion of Y_g alone (m >= 2; classes
// must be marked at the last element).
EClassExpr attach_km_closed_form(const EClassExpr& classes, int m);

// Class expansion of Y_{g+K_m} induced at (last, last+m), from the classes
// of Y_g alone (m >= 1).
EClassExpr induce_power_closed_form(const EClassExpr& classes, int m);

// Inducing Y_{g+K_m} at (d, d+j) and at (d, d+k) agree modulo d.
bool jk_equivalence_check(const LabeledMultigraph& g, int m, int j, int k,
                          const RunConfig& cfg = default_config());

// Inducing Y_g at (i, d+1) agrees modulo d+1 with inducing the (i j)
// relabeling of g at (j, d+1).
bool combine_check(const LabeledMultigraph& g, int i, int j,
                   const RunConfig& cfg = default_config());

// True when Y_g is class-positive at its last vertex and Y of g with a
// diamond glued on stays class-positive at the new last vertex.
bool attach_diamond_positivity_check(const LabeledMultigraph& g,
                                     const RunConfig& cfg = default_config());

// Rebuild the simple graph whose stable-partition expansion is y: co-blocked
// pairs in the support span the complement.  Throws if y is not such an
// expansion.
LabeledMultigraph reconstruct_from_y(const NCExpr& y, int d,
                                     const RunConfig& cfg = default_config());

struct TreeExperiment {
    int degree = 0;
    int tree_count = 0;
    bool x_all_distinct = false;
    bool y_reconstruction_ok = false;
    int class_collision_pairs = 0;  // tree pairs sharing a class expansion
};

// For every tree isomorphism class on d vertices: are the commutative images
// pairwise distinct, does reconstruction invert Y, and how often do class
// expansions collide.
TreeExperiment tree_experiment(int d, const RunConfig& cfg = default_config());

}  // namespace ncsym
