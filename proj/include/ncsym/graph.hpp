#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsym/config.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// Multigraph on labeled vertices 1..d.  Loops and parallel edges are allowed;
// edges keep their insertion order, which fixes the broken-circuit edge order
// and the stable edge ids used by delete/contract.
class LabeledMultigraph {
  public:
    LabeledMultigraph(int d, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return d_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const;
    bool is_loop(int id) const;
    bool has_loops() const;
    int nonloop_count() const;
    bool is_simple() const;  // no loops, no parallel edges
    std::vector<int> degrees() const;  // loops count twice

    LabeledMultigraph delete_edge(int id) const;
    // Contract edge {k,l} with k < l: merge l into k, shift labels above l
    // down by one.  Contracting a loop just deletes it.
    LabeledMultigraph contract_edge(int id) const;
    LabeledMultigraph relabel(const Perm& delta) const;

    std::string canonical_key() const;  // degree plus sorted edge multiset
    // Same vertex count and edge multiset; insertion order is presentation only.
    bool operator==(const LabeledMultigraph& other) const;

  private:
    int d_;
    std::vector<std::pair<int, int>> edges_;
};

// Families.
LabeledMultigraph path_graph(int d);
LabeledMultigraph cycle_graph(int d);      // cycle_graph(1) is a loop
LabeledMultigraph complete_graph(int d);
LabeledMultigraph complete_minus_edge(int d);  // drops the edge {d-1, d}
LabeledMultigraph empty_graph(int d);
LabeledMultigraph complement_graph(const LabeledMultigraph& g);
LabeledMultigraph disjoint_union(const LabeledMultigraph& a, const LabeledMultigraph& b);
LabeledMultigraph add_isolated_vertex(const LabeledMultigraph& g);
// Unit-interval style graph: i ~ j whenever both lie in a common interval.
LabeledMultigraph indifference_graph(const std::vector<std::pair<int, int>>& intervals);
// Chain of cliques with sizes alpha_1, alpha_2, ...; consecutive cliques
// share the running last vertex.
LabeledMultigraph k_alpha_chain(const Composition& alpha);
// Glue a clique on m vertices to g at its last vertex (m-1 new vertices).
LabeledMultigraph attach_complete(const LabeledMultigraph& g, int m);
LabeledMultigraph diamond_graph();
// Glue a diamond to g, identifying the diamond's first vertex with g's last.
LabeledMultigraph attach_diamond(const LabeledMultigraph& g);

// Partitions of the vertex set with every block independent in g.
std::vector<SetPartition> stable_partitions(const LabeledMultigraph& g,
                                            const RunConfig& cfg = default_config());

unsigned long long proper_coloring_count(const LabeledMultigraph& g, int n_colors,
                                         const RunConfig& cfg = default_config());

// Edge subsets are bitmasks over edge ids (edge id i <-> bit i).
using EdgeMask = std::uint32_t;

// Partition of 1..d into the connected components of the spanning subgraph
// with edge set S.
SetPartition components_partition(const LabeledMultigraph& g, EdgeMask s);

// Minimal edge sets whose incident vertices all have degree exactly two and
// which are connected: loops, parallel pairs, and simple cycles.
std::vector<EdgeMask> circuits(const LabeledMultigraph& g,
                               const RunConfig& cfg = default_config());
// Each circuit minus its largest edge, deduplicated and minimalized.
std::vector<EdgeMask> broken_circuits(const LabeledMultigraph& g,
                                      const RunConfig& cfg = default_config());
// All edge subsets containing no broken circuit.
std::vector<EdgeMask> broken_circuit_complex(const LabeledMultigraph& g,
                                             const RunConfig& cfg = default_config());

// Orientations are bitmasks over the non-loop edges in id order: bit 0 points
// the edge from its smaller to its larger endpoint.
std::vector<std::uint32_t> acyclic_orientations(const LabeledMultigraph& g,
                                                const RunConfig& cfg = default_config());
std::vector<int> orientation_sinks(const LabeledMultigraph& g, std::uint32_t orientation);
long long count_unique_sink(const LabeledMultigraph& g, int v0,
                            const RunConfig& cfg = default_config());
std::map<int, long long> sink_distribution(const LabeledMultigraph& g,
                                           const RunConfig& cfg = default_config());

bool is_isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b,
                   const RunConfig& cfg = default_config());

// One representative per isomorphism class of trees on d vertices.
std::vector<LabeledMultigraph> enumerate_trees(int d, const RunConfig& cfg = default_config());

// One representative per relabeling class of multigraphs on d vertices with
// at most max_edges edges, loops included.  Scans all d! relabelings per
// candidate, so this is strictly a small-d enumerator.
std::vector<LabeledMultigraph> multigraphs_up_to_relabeling(int d, int max_edges);

// Likewise for simple graphs (every subset of the possible edges).
std::vector<LabeledMultigraph> simple_graphs_up_to_relabeling(int d);

}  // namespace ncsym
