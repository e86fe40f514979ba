#include "ncsym/graph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace ncsym;

namespace {
using Edges = std::vector<std::pair<int, int>>;

std::set<EdgeMask> mask_set(const std::vector<EdgeMask>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("edges are normalized and validated") {
    LabeledMultigraph g(3, {{2, 1}, {3, 3}, {1, 3}});
    CHECK(g.edges() == Edges{{1, 2}, {3, 3}, {1, 3}});
    CHECK(g.edge(1) == std::pair<int, int>{3, 3});
    CHECK(g.is_loop(1));
    CHECK(!g.is_loop(0));
    CHECK(g.has_loops());
    CHECK(g.nonloop_count() == 2);
    CHECK(!g.is_simple());
    CHECK(g.degrees() == std::vector<int>{2, 1, 3});
    CHECK_THROWS_AS(LabeledMultigraph(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledMultigraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(g.edge(3), std::invalid_argument);
}

TEST_CASE("deletion and contraction") {
    auto p3 = path_graph(3);
    CHECK(p3.delete_edge(1) == LabeledMultigraph(3, {{1, 2}}));
    CHECK(p3.contract_edge(1) == path_graph(2));
    CHECK(p3.delete_edge(0).edge_count() == p3.edge_count() - 1);

    // contracting one side of a triangle leaves a double edge
    auto k3 = complete_graph(3);
    CHECK(k3.contract_edge(2) == LabeledMultigraph(2, {{1, 2}, {1, 2}}));

    // contracting a loop deletes it, keeping the vertex count
    LabeledMultigraph withloop(2, {{1, 1}, {1, 2}});
    CHECK(withloop.contract_edge(0) == LabeledMultigraph(2, {{1, 2}}));

    // labels above the removed vertex shift down
    LabeledMultigraph g(5, {{1, 3}, {3, 5}, {2, 4}});
    CHECK(g.contract_edge(0) == LabeledMultigraph(4, {{1, 4}, {2, 3}}));

    for (int id = 0; id < k3.edge_count(); ++id) {
        CHECK(k3.delete_edge(id).edge_count() == 2);
        CHECK(k3.contract_edge(id).edge_count() == 2);
    }
}

TEST_CASE("relabeling maps endpoints") {
    auto p3 = path_graph(3);
    Perm rot({2, 3, 1});
    CHECK(p3.relabel(rot) == LabeledMultigraph(3, {{2, 3}, {1, 3}}));
    CHECK(p3.relabel(rot).relabel(rot.inverse()) == p3);
    CHECK(p3.relabel(rot).canonical_key() != p3.canonical_key());
    CHECK(LabeledMultigraph(3, {{2, 3}, {1, 2}}).canonical_key() ==
          LabeledMultigraph(3, {{1, 2}, {3, 2}}).canonical_key());
}

TEST_CASE("graph families") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(4).edges() == Edges{{1, 2}, {2, 3}, {3, 4}});
    CHECK(cycle_graph(1) == LabeledMultigraph(1, {{1, 1}}));
    CHECK(cycle_graph(2) == LabeledMultigraph(2, {{1, 2}, {1, 2}}));
    CHECK(cycle_graph(4).edges() == Edges{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_minus_edge(4).edges() == Edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(complete_minus_edge(2) == empty_graph(2));
    CHECK(complement_graph(complete_graph(4)) == empty_graph(4));
    CHECK(complement_graph(empty_graph(4)) == complete_graph(4));
    CHECK(complement_graph(path_graph(3)) == LabeledMultigraph(3, {{1, 3}}));
    CHECK(disjoint_union(path_graph(2), path_graph(2)) ==
          LabeledMultigraph(4, {{1, 2}, {3, 4}}));
    CHECK(add_isolated_vertex(path_graph(2)) == LabeledMultigraph(3, {{1, 2}}));
}

TEST_CASE("interval graphs and clique chains") {
    CHECK(diamond_graph().edges() == Edges{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(indifference_graph({{1, 2}, {2, 3}}) == path_graph(3));
    CHECK_THROWS_AS(indifference_graph({{3, 2}}), std::invalid_argument);

    CHECK(k_alpha_chain(Composition({2, 2})) == path_graph(3));
    CHECK(k_alpha_chain(Composition({1})) == empty_graph(1));
    CHECK(k_alpha_chain(Composition({3})) == complete_graph(3));
    CHECK(k_alpha_chain(Composition({2, 1, 2})) == path_graph(3));

    // a chain is the same as repeatedly gluing cliques at the last vertex
    for (const auto& parts :
         {std::vector<int>{2, 3}, {3, 2, 2}, {1, 4}, {2, 2, 2, 2}, {4, 1, 3}}) {
        Composition alpha(parts);
        LabeledMultigraph g = complete_graph(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) g = attach_complete(g, parts[i]);
        CHECK(g == k_alpha_chain(alpha));
    }

    CHECK(attach_complete(path_graph(2), 1) == path_graph(2));
    CHECK(attach_complete(empty_graph(1), 4) == complete_graph(4));
    CHECK(attach_diamond(empty_graph(1)) == diamond_graph());
    CHECK(attach_diamond(path_graph(2)).vertex_count() == 5);
}

TEST_CASE("stable partitions avoid edges inside blocks") {
    auto got = stable_partitions(path_graph(3));
    CHECK(got == std::vector<SetPartition>{SetPartition({{1, 3}, {2}}),
                                           SetPartition::singletons(3)});
    CHECK(stable_partitions(complete_graph(4)) ==
          std::vector<SetPartition>{SetPartition::singletons(4)});
    CHECK(stable_partitions(LabeledMultigraph(2, {{1, 1}})).empty());
    CHECK(stable_partitions(empty_graph(3)).size() == 5);
    // parallel edges do not change stability
    CHECK(stable_partitions(cycle_graph(2)) ==
          std::vector<SetPartition>{SetPartition::singletons(2)});

    // equivariance under relabeling
    auto g = LabeledMultigraph(4, {{1, 2}, {2, 3}, {2, 4}});
    Perm delta({3, 1, 4, 2});
    std::set<SetPartition> want;
    for (const auto& p : stable_partitions(g)) want.insert(apply_perm(delta, p));
    auto moved = stable_partitions(g.relabel(delta));
    CHECK(std::set<SetPartition>(moved.begin(), moved.end()) == want);
}

TEST_CASE("proper coloring counts") {
    CHECK(proper_coloring_count(path_graph(3), 3) == 12);
    CHECK(proper_coloring_count(complete_graph(3), 3) == 6);
    CHECK(proper_coloring_count(complete_graph(3), 2) == 0);
    CHECK(proper_coloring_count(LabeledMultigraph(2, {{1, 1}}), 5) == 0);
    CHECK(proper_coloring_count(empty_graph(3), 2) == 8);
    CHECK(proper_coloring_count(path_graph(3), 0) == 0);
    CHECK(proper_coloring_count(cycle_graph(2), 3) == proper_coloring_count(path_graph(2), 3));
    RunConfig tight;
    tight.word_guard = 10;
    CHECK_THROWS_AS(proper_coloring_count(path_graph(5), 3, tight), GuardLimitError);
}

TEST_CASE("connected components of edge subsets") {
    auto g = path_graph(4);
    CHECK(components_partition(g, 0) == SetPartition::singletons(4));
    CHECK(components_partition(g, 0b111) == SetPartition::one_block(4));
    CHECK(components_partition(g, 0b101) == SetPartition({{1, 2}, {3, 4}}));
    // loops do not merge anything
    LabeledMultigraph h(2, {{1, 1}, {1, 2}});
    CHECK(components_partition(h, 0b01) == SetPartition::singletons(2));
}

TEST_CASE("circuits cover loops, parallel pairs, and cycles") {
    auto k3 = complete_graph(3);
    CHECK(circuits(k3) == std::vector<EdgeMask>{0b111});
    CHECK(broken_circuits(k3) == std::vector<EdgeMask>{0b011});
    CHECK(mask_set(broken_circuit_complex(k3)) ==
          std::set<EdgeMask>{0b000, 0b001, 0b010, 0b100, 0b101, 0b110});

    CHECK(circuits(cycle_graph(2)) == std::vector<EdgeMask>{0b11});
    CHECK(mask_set(broken_circuit_complex(cycle_graph(2))) == std::set<EdgeMask>{0b00, 0b10});

    LabeledMultigraph withloop(2, {{1, 2}, {2, 2}});
    CHECK(circuits(withloop) == std::vector<EdgeMask>{0b10});
    CHECK(broken_circuit_complex(withloop).empty());

    CHECK(circuits(path_graph(4)).empty());
    CHECK(broken_circuit_complex(path_graph(4)).size() == 8);

    // two triangles sharing a vertex: circuits are exactly the triangles
    LabeledMultigraph bowtie(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(circuits(bowtie).size() == 2);

    RunConfig tight;
    tight.subset_guard = 2;
    CHECK_THROWS_AS(circuits(k3, tight), GuardLimitError);
}

TEST_CASE("broken circuit split along the first edge") {
    // members of the complex split by the first edge: those avoiding it form
    // the complex of G minus the edge, those through it map to the complex of
    // the contraction (ids shift down by one in both cases)
    std::vector<LabeledMultigraph> samples = {
        complete_graph(3),    complete_graph(4),
        cycle_graph(4),       cycle_graph(5),
        diamond_graph(),      LabeledMultigraph(3, {{1, 2}, {1, 2}, {2, 3}}),
        k_alpha_chain(Composition({3, 2})),
        LabeledMultigraph(4, {{1, 2}, {1, 2}, {3, 4}, {2, 3}, {1, 4}}),
    };
    for (const auto& g : samples) {
        REQUIRE(!g.has_loops());
        auto whole = broken_circuit_complex(g);
        std::set<EdgeMask> without, with;
        for (EdgeMask s : whole)
            (s & 1 ? with : without).insert(s >> 1);
        CHECK(without == mask_set(broken_circuit_complex(g.delete_edge(0))));
        CHECK(with == mask_set(broken_circuit_complex(g.contract_edge(0))));
    }
}

TEST_CASE("acyclic orientations and sinks") {
    auto k3 = complete_graph(3);
    auto acyc = acyclic_orientations(k3);
    CHECK(acyc.size() == 6);
    for (auto mask : acyc) CHECK(orientation_sinks(k3, mask).size() >= 1);
    CHECK(count_unique_sink(k3, 1) == 2);
    CHECK(count_unique_sink(k3, 2) == 2);
    CHECK(count_unique_sink(k3, 3) == 2);

    auto p3 = path_graph(3);
    CHECK(acyclic_orientations(p3).size() == 4);
    CHECK(sink_distribution(p3) == std::map<int, long long>{{1, 3}, {2, 1}});

    // parallel edges must point the same way
    CHECK(acyclic_orientations(cycle_graph(2)).size() == 2);
    CHECK(acyclic_orientations(LabeledMultigraph(1, {{1, 1}})).empty());
    CHECK(sink_distribution(empty_graph(3)) == std::map<int, long long>{{3, 1}});

    RunConfig tight;
    tight.orientation_guard = 2;
    CHECK_THROWS_AS(acyclic_orientations(k3, tight), GuardLimitError);
}

TEST_CASE("isomorphism testing by backtracking") {
    auto p4 = path_graph(4);
    Perm delta({3, 1, 4, 2});
    CHECK(is_isomorphic(p4, p4.relabel(delta)));
    CHECK(!is_isomorphic(p4, cycle_graph(4)));
    CHECK(!is_isomorphic(p4, LabeledMultigraph(4, {{1, 2}, {1, 3}, {1, 4}})));
    CHECK(!is_isomorphic(path_graph(3), path_graph(4)));

    // multiplicities matter
    CHECK(!is_isomorphic(cycle_graph(2), path_graph(2)));
    CHECK(is_isomorphic(LabeledMultigraph(3, {{1, 2}, {1, 2}}),
                        LabeledMultigraph(3, {{2, 3}, {2, 3}})));
    CHECK(!is_isomorphic(LabeledMultigraph(2, {{1, 1}}), LabeledMultigraph(2, {{1, 2}})));
    CHECK(is_isomorphic(LabeledMultigraph(2, {{1, 1}}), LabeledMultigraph(2, {{2, 2}})));

    // same degree sequence, different trees
    LabeledMultigraph spider(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}});
    LabeledMultigraph caterpillar(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
    auto ds = [](const LabeledMultigraph& g) {
        auto v = g.degrees();
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(ds(spider) == ds(caterpillar));
    CHECK(!is_isomorphic(spider, caterpillar));
}

TEST_CASE("tree enumeration up to isomorphism") {
    const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23};
    for (int d = 1; d <= 8; ++d) {
        auto trees = enumerate_trees(d);
        CHECK(trees.size() == counts[d - 1]);
        for (const auto& t : trees) {
            CHECK(t.vertex_count() == d);
            CHECK(t.edge_count() == d - 1);
            CHECK(components_partition(t, (EdgeMask(1) << (d - 1)) - 1) ==
                  SetPartition::one_block(d));
        }
    }
    auto t7 = enumerate_trees(7);
    for (std::size_t i = 0; i < t7.size(); ++i)
        for (std::size_t j = i + 1; j < t7.size(); ++j) CHECK(!is_isomorphic(t7[i], t7[j]));
    CHECK_THROWS_AS(enumerate_trees(9), GuardLimitError);
}

TEST_CASE("small-graph enumeration up to relabeling") {
    // simple graphs: 1, 2, 4, 11, 34 isomorphism classes on 1..5 vertices
    const std::vector<std::size_t> simple_counts{1, 2, 4, 11, 34};
    for (int d = 1; d <= 5; ++d) {
        auto reps = simple_graphs_up_to_relabeling(d);
        CHECK(reps.size() == simple_counts[d - 1]);
        for (const auto& g : reps) CHECK(g.is_simple());
    }

    // one vertex, up to three loops
    CHECK(multigraphs_up_to_relabeling(1, 3).size() == 4);
    // two vertices, at most two edges drawn from {loop at 1, loop at 2, 1-2}
    CHECK(multigraphs_up_to_relabeling(2, 2).size() == 7);

    auto reps3 = multigraphs_up_to_relabeling(3, 3);
    for (std::size_t i = 0; i < reps3.size(); ++i)
        for (std::size_t j = i + 1; j < reps3.size(); ++j)
            CHECK(!is_isomorphic(reps3[i], reps3[j]));

    CHECK_THROWS_AS(simple_graphs_up_to_relabeling(7), GuardLimitError);
    CHECK_THROWS_AS(multigraphs_up_to_relabeling(7, 2), GuardLimitError);
    CHECK_THROWS_AS(multigraphs_up_to_relabeling(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(multigraphs_up_to_relabeling(2, -1), std::invalid_argument);
}
