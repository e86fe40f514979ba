#include "ncsym/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ncsym/chromatic.hpp"
#include "ncsym/graph.hpp"
#include "ncsym/nc_expr.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

bool VerifyReport::ok() const {
    return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; });
}

namespace {

// A case body returns a failure description, or "" when everything held.
class Suite {
  public:
    explicit Suite(std::string name) { report_.suite = std::move(name); }

    template <class F>
    void run(const std::string& name, F&& body) {
        VerifyCase c{name, false, {}};
        try {
            c.detail = body();
            c.pass = c.detail.empty();
        } catch (const GuardLimitError&) {
            throw;  // a tripped guard is a configuration problem, not a finding
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        report_.cases.push_back(std::move(c));
    }

    VerifyReport take() { return std::move(report_); }

  private:
    VerifyReport report_;
};

std::string ok() { return {}; }

std::string describe(const LabeledMultigraph& g) { return g.canonical_key(); }

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            self(self, rest - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

EClassExpr classes_of(const NCExpr& y, int marked) {
    return amalgamate(to_basis(y, Basis::E), marked);
}

bool is_connected(const LabeledMultigraph& g) {
    const EdgeMask all = g.edge_count() == 0 ? 0 : (EdgeMask(1) << g.edge_count()) - 1;
    return components_partition(g, all).block_count() == 1;
}

LabeledMultigraph random_multigraph(int d, int max_edges, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, max_edges), vertex(1, d);
    std::vector<std::pair<int, int>> edges;
    const int m = count(rng);
    for (int t = 0; t < m; ++t) edges.emplace_back(vertex(rng), vertex(rng));
    return LabeledMultigraph(d, std::move(edges));
}

std::vector<Perm> all_perms(int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do out.push_back(Perm(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// The staple graphs most checks loop over: connected, disconnected, multi.
std::vector<LabeledMultigraph> corpus() {
    return {path_graph(2),
            path_graph(4),
            path_graph(6),
            cycle_graph(3),
            cycle_graph(5),
            complete_graph(4),
            complete_minus_edge(4),
            complete_minus_edge(5),
            diamond_graph(),
            k_alpha_chain(Composition({2, 2})),
            k_alpha_chain(Composition({3, 2, 2})),
            attach_diamond(path_graph(2)),
            disjoint_union(complete_graph(3), path_graph(2)),
            add_isolated_vertex(cycle_graph(4)),
            LabeledMultigraph(3, {{1, 2}, {1, 2}, {2, 3}}),
            LabeledMultigraph(4, {{1, 2}, {2, 3}, {2, 3}, {3, 4}, {1, 4}})};
}

VerifyReport suite_bases(const RunConfig& cfg) {
    Suite s("bases");

    s.run("mobius sums telescope over every interval", [&] {
        for (int d = 1; d <= 6; ++d) {
            const auto all = enumerate_partitions(d, cfg);
            for (const auto& tau : all)
                for (const auto& sigma : all) {
                    if (!leq(sigma, tau)) continue;
                    long long sum = 0;
                    for (const auto& rho : all)
                        if (leq(sigma, rho) && leq(rho, tau)) sum += mobius(rho, tau);
                    if (sum != (sigma == tau ? 1 : 0))
                        return "interval [" + slash_string(sigma) + ", " + slash_string(tau) +
                               "] sums to " + std::to_string(sum);
                }
        }
        return ok();
    });

    s.run("meet is commutative, associative, idempotent, and a lower bound", [&] {
        for (int d = 1; d <= 4; ++d) {
            const auto all = enumerate_partitions(d, cfg);
            for (const auto& a : all) {
                if (meet(a, a) != a) return "meet(" + slash_string(a) + ", same) moved";
                for (const auto& b : all) {
                    const auto m = meet(a, b);
                    if (m != meet(b, a) || !leq(m, a) || !leq(m, b))
                        return "meet misbehaves at " + slash_string(a) + ", " + slash_string(b);
                }
            }
            if (d < 4) continue;
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all)
                        if (meet(meet(a, b), c) != meet(a, meet(b, c)))
                            return "associativity fails at " + slash_string(a) + ", " +
                                   slash_string(b) + ", " + slash_string(c);
        }
        return ok();
    });

    s.run("canonical labels are a fixed point", [&] {
        for (int d = 1; d <= 6; ++d)
            for (const auto& p : enumerate_partitions(d, cfg))
                if (SetPartition::from_labels(p.labels()) != p)
                    return "relabeling moved " + slash_string(p);
        if (SetPartition::from_labels({2, 7, 2}) != SetPartition({{1, 3}, {2}}))
            return std::string("scrambled labels did not canonicalize");
        return ok();
    });

    s.run("relabeling acts as a group and preserves shape", [&] {
        const auto perms = all_perms(4);
        for (const auto& pi : enumerate_partitions(4, cfg)) {
            for (const auto& delta : perms) {
                if (shape(apply_perm(delta, pi)) != shape(pi))
                    return "shape changed under relabeling of " + slash_string(pi);
                for (const auto& gamma : perms)
                    if (apply_perm(delta.after(gamma), pi) !=
                        apply_perm(delta, apply_perm(gamma, pi)))
                        return "composition fails on " + slash_string(pi);
            }
        }
        return ok();
    });

    s.run("every basis pair round trips", [&] {
        const Basis bases[] = {Basis::M, Basis::P, Basis::E};
        for (int d = 1; d <= 5; ++d)
            for (const auto& pi : enumerate_partitions(d, cfg))
                for (Basis a : bases)
                    for (Basis b : bases) {
                        if (a == b) continue;
                        const NCExpr x = NCExpr::unit(a, pi);
                        if (to_basis(to_basis(x, b), a) != x)
                            return std::string(1, basis_char(a)) + "->" + basis_char(b) +
                                   "->back moved " + slash_string(pi);
                    }
        return ok();
    });

    s.run("word expansions commute with change of basis", [&] {
        const Basis bases[] = {Basis::M, Basis::P, Basis::E};
        for (int d = 1; d <= 4; ++d) {
            const int n_vars = d <= 3 ? 4 : 3;
            for (const auto& pi : enumerate_partitions(d, cfg))
                for (Basis a : bases) {
                    const NCExpr x = NCExpr::unit(a, pi);
                    const auto direct = expand_words(x, n_vars, cfg);
                    for (Basis b : bases)
                        if (expand_words(to_basis(x, b), n_vars, cfg) != direct)
                            return std::string("words differ for ") + basis_char(a) + "_{" +
                                   slash_string(pi) + "} via " + basis_char(b);
                }
        }
        return ok();
    });

    s.run("induction through power sums matches the elementary closed form", [&] {
        for (int d = 1; d <= 5; ++d)
            for (const auto& pi : enumerate_partitions(d, cfg)) {
                const NCExpr e = NCExpr::unit(Basis::E, pi);
                if (to_basis(induce(e), Basis::E) != induce_changeup(e))
                    return "raising e_{" + slash_string(pi) + "} disagrees";
            }
        return ok();
    });

    s.run("induced class sums collapse to the three allowed values", [&] {
        for (int d = 1; d <= 5; ++d)
            for (const auto& pi : enumerate_partitions(d, cfg)) {
                const NCExpr up = to_basis(induce(NCExpr::unit(Basis::E, pi)), Basis::E);
                const Rat inv_b = ratio(1, pi.block_size_of(d));
                const SetPartition fresh = new_singleton(pi);
                const SetPartition grown = insert_into_block_of_last(pi);
                for (const auto& tau : enumerate_partitions(d + 1, cfg))
                    if (up.coeff(tau) != 0 && !leq(tau, grown))
                        return "support of e_{" + slash_string(pi) + "} raised leaks to " +
                               slash_string(tau);
                for (const auto& alpha : compositions_of(d + 1)) {
                    const auto members = enumerate_Palpha(pi, alpha, d + 1);
                    Rat sum;
                    for (const auto& tau : members) sum += up.coeff(tau);
                    const bool lone = members.size() == 1;
                    const Rat want = lone && members[0] == fresh    ? inv_b
                                     : lone && members[0] == grown ? Rat(-inv_b)
                                                                   : Rat(0);
                    if (sum != want)
                        return "group sum off for e_{" + slash_string(pi) + "}";
                }
            }
        return ok();
    });

    s.run("congruent elementary terms stay congruent after raising", [&] {
        for (int d = 2; d <= 4; ++d) {
            const auto all = enumerate_partitions(d, cfg);
            for (const auto& gamma : all)
                for (const auto& tau : all) {
                    const NCExpr eg = NCExpr::unit(Basis::E, gamma);
                    const NCExpr et = NCExpr::unit(Basis::E, tau);
                    if (amalgamate(eg, d) != amalgamate(et, d)) continue;
                    if (classes_of(induce(eg), d + 1) != classes_of(induce(et), d + 1))
                        return "raising separated e_{" + slash_string(gamma) + "} and e_{" +
                               slash_string(tau) + "}";
                }
        }
        return ok();
    });

    s.run("one-step raising congruences hold at both marked elements", [&] {
        for (int d = 1; d <= 4; ++d)
            for (const auto& pi : enumerate_partitions(d, cfg)) {
                const int b = pi.block_size_of(d);
                const NCExpr up = induce(NCExpr::unit(Basis::E, pi));
                for (int marked : {d + 1, d}) {
                    EClassExpr expect(d + 1, marked);
                    expect.add_term({shape(new_singleton(pi)), 1}, ratio(1, b));
                    expect.add_term({shape(insert_into_block_of_last(pi)), b + 1}, ratio(-1, b));
                    if (classes_of(up, marked) != expect)
                        return "classes of e_{" + slash_string(pi) + "} raised are off at mark " +
                               std::to_string(marked);
                }
            }
        return ok();
    });

    s.run("position action commutes with change of basis", [&] {
        const Basis bases[] = {Basis::M, Basis::P, Basis::E};
        for (const auto& pi : enumerate_partitions(4, cfg))
            for (const auto& delta : all_perms(4))
                for (Basis b : bases) {
                    const NCExpr x = NCExpr::unit(Basis::M, pi);
                    if (act(delta, to_basis(x, b)) != to_basis(act(delta, x), b))
                        return "action and conversion clash on m_{" + slash_string(pi) + "}";
                }
        return ok();
    });

    s.run("specialization is basis-independent", [&] {
        const Basis bases[] = {Basis::M, Basis::P, Basis::E};
        for (int d = 1; d <= 4; ++d)
            for (const auto& pi : enumerate_partitions(d, cfg))
                for (Basis a : bases) {
                    const NCExpr x = NCExpr::unit(a, pi);
                    for (Basis b : bases)
                        if (specialize_ones(to_basis(x, b)) != specialize_ones(x))
                            return std::string("specialization moved for ") + basis_char(a) +
                                   "_{" + slash_string(pi) + "}";
                }
        return ok();
    });

    return s.take();
}

VerifyReport suite_delcon(const RunConfig& cfg) {
    Suite s("delcon");

    auto routes_agree = [&](const LabeledMultigraph& g) {
        const NCExpr ym = y_stable(g, cfg);
        return to_basis(y_delcon(g, cfg), Basis::M) == ym &&
               to_basis(y_delcon_relabel(g, cfg), Basis::M) == ym &&
               to_basis(y_subsets_p(g, cfg), Basis::M) == ym &&
               to_basis(y_broken_circuit_p(g, cfg), Basis::M) == ym;
    };

    s.run("four routes agree on all small multigraphs", [&] {
        for (int d = 1; d <= 4; ++d)
            for (const auto& g : multigraphs_up_to_relabeling(d, 5))
                if (!routes_agree(g)) return "routes split on " + describe(g);
        return ok();
    });

    s.run("four routes agree on seeded random graphs", [&] {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> deg(5, 7);
        for (int t = 0; t < 40; ++t) {
            const auto g = random_multigraph(deg(rng), 10, rng);
            if (!routes_agree(g)) return "routes split on " + describe(g);
        }
        return ok();
    });

    s.run("expansions transform under relabeling", [&] {
        for (const auto& g :
             {path_graph(4), cycle_graph(4), complete_minus_edge(4), diamond_graph(),
              LabeledMultigraph(4, {{1, 2}, {1, 2}, {3, 4}, {1, 1}})})
            for (const auto& delta : all_perms(4))
                if (act(delta, y_stable(g, cfg)) != y_stable(g.relabel(delta), cfg))
                    return "relabeling failed on " + describe(g);
        std::mt19937_64 rng(cfg.seed);
        auto images = std::vector<int>{1, 2, 3, 4, 5, 6};
        for (int t = 0; t < 5; ++t) {
            std::shuffle(images.begin(), images.end(), rng);
            const Perm delta(images);
            for (const auto& g : {path_graph(6), cycle_graph(6)})
                if (act(delta, y_stable(g, cfg)) != y_stable(g.relabel(delta), cfg))
                    return "relabeling failed on " + describe(g);
        }
        return ok();
    });

    s.run("broken-circuit route ignores the edge order", [&] {
        std::mt19937_64 rng(cfg.seed);
        for (const auto& g : corpus()) {
            if (g.has_loops()) continue;
            const NCExpr want = to_basis(y_broken_circuit_p(g, cfg), Basis::M);
            auto edges = g.edges();
            for (int t = 0; t < 3; ++t) {
                std::shuffle(edges.begin(), edges.end(), rng);
                const LabeledMultigraph h(g.vertex_count(), edges);
                if (to_basis(y_broken_circuit_p(h, cfg), Basis::M) != want)
                    return "edge order changed the sum on " + describe(g);
            }
        }
        return ok();
    });

    s.run("disjoint unions multiply in the power-sum basis", [&] {
        const std::vector<LabeledMultigraph> parts = {empty_graph(1), path_graph(2),
                                                      path_graph(3), complete_graph(3),
                                                      cycle_graph(4)};
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (a.vertex_count() + b.vertex_count() > 7) continue;
                const NCExpr lhs = to_basis(y_stable(disjoint_union(a, b), cfg), Basis::P);
                if (lhs != disjoint_product(y_delcon(a, cfg), y_delcon(b, cfg)))
                    return "product failed on " + describe(a) + " with " + describe(b);
            }
        return ok();
    });

    s.run("subset complexes split along the pivot edge", [&] {
        for (int d = 2; d <= 4; ++d)
            for (const auto& g : multigraphs_up_to_relabeling(d, 5)) {
                if (g.has_loops() || g.edge_count() == 0) continue;
                std::set<EdgeMask> without, with;
                for (EdgeMask m : broken_circuit_complex(g, cfg)) (m & 1 ? with : without).insert(m >> 1);
                const auto del = broken_circuit_complex(g.delete_edge(0), cfg);
                const auto con = broken_circuit_complex(g.contract_edge(0), cfg);
                if (without != std::set<EdgeMask>(del.begin(), del.end()) ||
                    with != std::set<EdgeMask>(con.begin(), con.end()))
                    return "complex split failed on " + describe(g);
            }
        return ok();
    });

    s.run("chromatic polynomials count proper colorings", [&] {
        auto graphs = corpus();
        graphs.push_back(LabeledMultigraph(2, {{1, 1}}));
        graphs.push_back(empty_graph(4));
        for (const auto& g : graphs) {
            const UniPoly chi = chromatic_polynomial(g, cfg);
            for (int n = 0; n <= g.vertex_count() + 1; ++n)
                if (chi.eval(ratio(n)) != to_rat(static_cast<long long>(proper_coloring_count(g, n, cfg))))
                    return "count differs at n=" + std::to_string(n) + " on " + describe(g);
        }
        return ok();
    });

    return s.take();
}

VerifyReport suite_sinks(const RunConfig& cfg) {
    Suite s("sinks");

    auto loopless_corpus = [&] {
        std::vector<LabeledMultigraph> graphs;
        for (int d = 1; d <= 5; ++d)
            for (auto& g : simple_graphs_up_to_relabeling(d)) graphs.push_back(std::move(g));
        graphs.push_back(LabeledMultigraph(3, {{1, 2}, {1, 2}, {2, 3}}));
        graphs.push_back(LabeledMultigraph(2, {{1, 2}, {1, 2}}));
        return graphs;
    };

    s.run("top elementary coefficient counts unique sinks at every vertex", [&] {
        for (const auto& g : loopless_corpus()) {
            const long long via = unique_sink_count_via_e(g, cfg);
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (count_unique_sink(g, v, cfg) != via)
                    return "count at vertex " + std::to_string(v) + " differs on " + describe(g);
        }
        return ok();
    });

    s.run("sink distributions match the coefficient lengths", [&] {
        for (const auto& g : loopless_corpus()) {
            const auto via = sink_distribution_via_e(g, cfg);
            std::map<int, Rat> direct;
            for (const auto& [j, n] : sink_distribution(g, cfg)) direct[j] = to_rat(n);
            if (via != direct) return "distribution differs on " + describe(g);
        }
        return ok();
    });

    s.run("unique-sink counts satisfy deletion-contraction at the root", [&] {
        for (const auto& g : {path_graph(4), cycle_graph(4), cycle_graph(5), complete_graph(4),
                              complete_minus_edge(4), diamond_graph(),
                              LabeledMultigraph(3, {{1, 2}, {1, 2}, {2, 3}})})
            for (int v0 = 1; v0 <= g.vertex_count(); ++v0)
                for (int id = 0; id < g.edge_count(); ++id) {
                    const auto [k, l] = g.edge(id);
                    if (k == l || (v0 != k && v0 != l)) continue;
                    const long long whole = count_unique_sink(g, v0, cfg);
                    const long long split = count_unique_sink(g.delete_edge(id), v0, cfg) +
                                            count_unique_sink(g.contract_edge(id), k, cfg);
                    if (whole != split)
                        return "recursion broke at v" + std::to_string(v0) + " on " + describe(g);
                }
        return ok();
    });

    s.run("every acyclic orientation has a sink", [&] {
        for (const auto& g : loopless_corpus())
            for (std::uint32_t o : acyclic_orientations(g, cfg))
                if (orientation_sinks(g, o).empty())
                    return "sinkless orientation on " + describe(g);
        return ok();
    });

    s.run("linear chromatic coefficient counts unique sinks", [&] {
        for (const auto& g : loopless_corpus()) {
            if (!is_connected(g)) continue;
            Rat a1 = chromatic_polynomial(g, cfg).coeff(1);
            if (a1 < 0) a1 = -a1;
            if (a1 != to_rat(count_unique_sink(g, 1, cfg)))
                return "linear coefficient differs on " + describe(g);
        }
        return ok();
    });

    return s.take();
}

VerifyReport suite_positivity(const RunConfig& cfg) {
    Suite s("positivity");

    s.run("paths and cycles are class-positive", [&] {
        for (int d = 1; d <= 6; ++d) {
            if (!is_e_class_positive(path_graph(d), 0, cfg))
                return "path on " + std::to_string(d) + " vertices came out negative";
            if (!is_e_class_positive(cycle_graph(d), 0, cfg))
                return "cycle on " + std::to_string(d) + " vertices came out negative";
        }
        return ok();
    });

    s.run("cycle classes equal path classes with the marked block grown", [&] {
        for (int d = 1; d <= 6; ++d)
            if (!path_cycle_relation_check(d, cfg))
                return "relation fails at d=" + std::to_string(d);
        return ok();
    });

    s.run("clique chains are class-positive", [&] {
        for (int n = 2; n <= 7; ++n)
            for (const auto& alpha : compositions_of(n)) {
                if (std::any_of(alpha.parts.begin(), alpha.parts.end(),
                                [](int p) { return p < 2; }))
                    continue;
                if (!is_e_class_positive(k_alpha_chain(alpha), 0, cfg))
                    return "chain came out negative at total " + std::to_string(n);
            }
        return ok();
    });

    s.run("clique attachment closed form matches scratch", [&] {
        std::vector<LabeledMultigraph> bases;
        for (int d = 1; d <= 3; ++d)
            for (auto& g : simple_graphs_up_to_relabeling(d)) bases.push_back(std::move(g));
        bases.push_back(path_graph(4));
        bases.push_back(cycle_graph(4));
        for (const auto& g : bases)
            for (int m = 2; m <= 4; ++m)
                if (attach_km_closed_form(e_class_expansion(g, 0, cfg), m) !=
                    e_class_expansion(attach_complete(g, m), 0, cfg))
                    return "closed form differs on " + describe(g) + " with m=" +
                           std::to_string(m);
        return ok();
    });

    s.run("induced clique attachment closed form matches scratch", [&] {
        for (const auto& g : {path_graph(2), path_graph(3), complete_graph(3)}) {
            const int d = g.vertex_count();
            for (int m = 1; m <= 3; ++m) {
                const NCExpr yk = y_stable(attach_complete(g, m), cfg);
                if (induce_power_closed_form(classes_of(y_stable(g, cfg), d), m) !=
                    classes_of(induce_at(yk, d, d + m), d + m))
                    return "induced form differs on " + describe(g) + " with m=" +
                           std::to_string(m);
            }
        }
        return ok();
    });

    s.run("raising positions are interchangeable", [&] {
        if (!jk_equivalence_check(path_graph(2), 3, 1, 2, cfg) ||
            !jk_equivalence_check(path_graph(2), 3, 2, 3, cfg) ||
            !jk_equivalence_check(path_graph(3), 2, 1, 2, cfg) ||
            !jk_equivalence_check(complete_graph(3), 3, 1, 3, cfg))
            return std::string("raised positions on an attached clique disagree");
        if (!combine_check(path_graph(3), 1, 2, cfg) || !combine_check(path_graph(3), 2, 3, cfg) ||
            !combine_check(complete_minus_edge(4), 1, 3, cfg) ||
            !combine_check(cycle_graph(4), 2, 4, cfg))
            return std::string("raising at transposed vertices disagrees");
        return ok();
    });

    s.run("diamond attachment preserves class positivity", [&] {
        for (const auto& g : {path_graph(1), path_graph(2), path_graph(3)})
            if (!attach_diamond_positivity_check(g, cfg))
                return "attachment lost positivity on " + describe(g);
        if (!is_e_class_positive(diamond_graph(), 0, cfg))
            return std::string("the diamond itself came out negative");
        return ok();
    });

    s.run("witness search is budgeted, exhaustive, and honest", [&] {
        const auto found = search_positive_labeling(path_graph(4), -1, cfg);
        if (!found.witness) return std::string("no witness found for a positive path");
        const auto claw = search_positive_labeling(LabeledMultigraph(4, {{1, 2}, {1, 3}, {1, 4}}),
                                                   -1, cfg);
        if (claw.witness || !claw.exhaustive || claw.tried != 24)
            return std::string("claw search should exhaust 24 labelings without a witness");
        const auto star = search_positive_labeling(
            LabeledMultigraph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}), -1, cfg);
        if (star.witness || !star.exhaustive)
            return std::string("five-vertex star search should exhaust without a witness");
        const auto none = search_positive_labeling(path_graph(3), 0, cfg);
        if (none.witness || none.exhaustive || none.tried != 0)
            return std::string("zero budget must try nothing and say so");
        return ok();
    });

    return s.take();
}

VerifyReport suite_families(const RunConfig& cfg) {
    Suite s("families");

    s.run("constructors produce the documented labeled graphs", [&] {
        using Edges = std::vector<std::pair<int, int>>;
        if (path_graph(3).edges() != Edges{{1, 2}, {2, 3}})
            return std::string("path edges are off");
        if (diamond_graph().edges() != Edges{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})
            return std::string("diamond edges are off");
        if (k_alpha_chain(Composition({2, 2})) != path_graph(3))
            return std::string("a chain of two edges is not the 3-path");
        if (k_alpha_chain(Composition({3, 2, 2})) !=
            attach_complete(attach_complete(complete_graph(3), 2), 2))
            return std::string("chains do not grow one clique at a time");
        if (indifference_graph({{1, 3}, {2, 4}}) != diamond_graph())
            return std::string("interval presentation of the diamond is off");
        if (attach_complete(path_graph(2), 2) != path_graph(3))
            return std::string("attaching an edge is not a path step");
        if (complement_graph(complete_graph(4)) != empty_graph(4))
            return std::string("complement of complete is not empty");
        if (cycle_graph(1) != LabeledMultigraph(1, {{1, 1}}))
            return std::string("one-cycle is not a loop");
        if (disjoint_union(path_graph(2), path_graph(2)) !=
            LabeledMultigraph(4, {{1, 2}, {3, 4}}))
            return std::string("disjoint union labels are off");
        return ok();
    });

    s.run("stable partitions match the worked expansions", [&] {
        const auto p3 = stable_partitions(path_graph(3), cfg);
        const std::set<SetPartition> got(p3.begin(), p3.end());
        if (got != std::set<SetPartition>{SetPartition({{1, 3}, {2}}), SetPartition::singletons(3)})
            return std::string("3-path stable partitions are off");
        if (stable_partitions(complete_graph(3), cfg) !=
            std::vector<SetPartition>{SetPartition::singletons(3)})
            return std::string("triangle stable partitions are off");
        if (!stable_partitions(LabeledMultigraph(2, {{1, 1}}), cfg).empty())
            return std::string("a loop admitted a stable partition");
        NCExpr want(3, Basis::M);
        want.add_term(SetPartition({{1, 3}, {2}}), ratio(1));
        want.add_term(SetPartition::singletons(3), ratio(1));
        if (y_stable(path_graph(3), cfg) != want)
            return std::string("3-path monomial expansion is off");
        return ok();
    });

    s.run("complete graphs reduce to one elementary term", [&] {
        for (int n = 1; n <= 6; ++n)
            if (to_basis(y_stable(complete_graph(n), cfg), Basis::E) !=
                NCExpr::unit(Basis::E, SetPartition::one_block(n)))
                return "complete graph on " + std::to_string(n) + " vertices is off";
        return ok();
    });

    s.run("complete-minus-edge classes follow the closed form", [&] {
        for (int d = 2; d <= 6; ++d) {
            const auto classes = e_class_expansion(complete_minus_edge(d), d, cfg);
            if (classes != closed_form_kd_minus_e(d))
                return "class expansion differs at d=" + std::to_string(d);
            if (classes.coeff({IntegerPartition(std::vector<int>(1, d)), d}) !=
                    ratio(d - 2, d - 1) ||
                (d > 2 && classes.coeff({IntegerPartition({d - 1, 1}), 1}) != ratio(1, d - 1)))
                return "closed-form values are off at d=" + std::to_string(d);
            if (!is_e_class_positive(complete_minus_edge(d), d, cfg) ||
                !is_e_class_positive(complete_minus_edge(d), d - 1, cfg))
                return "positivity at the missing edge fails at d=" + std::to_string(d);
        }
        return ok();
    });

    s.run("complete-minus-edge commutative closed form", [&] {
        for (int d = 2; d <= 6; ++d)
            if (x_commutative(complete_minus_edge(d), Basis::E, cfg) != closed_form_x_kd_minus_e(d))
                return "commutative image differs at d=" + std::to_string(d);
        return ok();
    });

    s.run("loops and edgeless graphs degenerate correctly", [&] {
        const LabeledMultigraph loop(2, {{1, 1}, {1, 2}});
        if (!y_stable(loop, cfg).is_zero() || !y_delcon(loop, cfg).is_zero() ||
            !y_subsets_p(loop, cfg).is_zero() || !y_broken_circuit_p(loop, cfg).is_zero())
            return std::string("a loop should kill every route");
        if (chromatic_polynomial(loop, cfg) != UniPoly())
            return std::string("a loop should kill the polynomial");
        for (int d = 1; d <= 4; ++d)
            if (y_delcon(empty_graph(d), cfg) !=
                NCExpr::unit(Basis::P, SetPartition::singletons(d)))
                return "edgeless base case differs at d=" + std::to_string(d);
        return ok();
    });

    return s.take();
}

VerifyReport suite_reconstruction(const RunConfig& cfg) {
    Suite s("reconstruction");

    s.run("reconstruction inverts the stable expansion exhaustively", [&] {
        for (int d = 1; d <= 4; ++d)
            for (const auto& g : simple_graphs_up_to_relabeling(d))
                if (reconstruct_from_y(y_stable(g, cfg), d, cfg) != g)
                    return "round trip failed on " + describe(g);
        return ok();
    });

    s.run("reconstruction inverts on seeded degree-5 samples", [&] {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint32_t> mask(0, (1u << 10) - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
        for (int t = 0; t < 25; ++t) {
            std::vector<std::pair<int, int>> edges;
            const std::uint32_t m = mask(rng);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (m >> i & 1u) edges.push_back(pairs[i]);
            const LabeledMultigraph g(5, std::move(edges));
            if (reconstruct_from_y(y_stable(g, cfg), 5, cfg) != g)
                return "round trip failed on " + describe(g);
        }
        return ok();
    });

    s.run("non-graphic expansions are rejected", [&] {
        NCExpr bogus(3, Basis::M);
        bogus.add_term(SetPartition({{1, 2}, {3}}), ratio(1));
        try {
            reconstruct_from_y(bogus, 3, cfg);
            return std::string("a partial expansion was accepted");
        } catch (const std::invalid_argument&) {
        }
        try {
            reconstruct_from_y(y_subsets_p(path_graph(3), cfg), 3, cfg);
            return std::string("a power-sum expansion was accepted");
        } catch (const std::invalid_argument&) {
        }
        return ok();
    });

    s.run("trees separate and reconstruct", [&] {
        const auto r = tree_experiment(5, cfg);
        if (r.tree_count != 3) return std::string("wrong number of 5-vertex trees");
        if (!r.x_all_distinct) return std::string("two 5-vertex trees share an image");
        if (!r.y_reconstruction_ok) return std::string("a 5-vertex tree failed to reconstruct");
        return ok();
    });

    return s.take();
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"bases",      "delcon",   "sinks",
                                                   "positivity", "families", "reconstruction"};
    return names;
}

VerifyReport run_verify_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "bases") return suite_bases(cfg);
    if (name == "delcon") return suite_delcon(cfg);
    if (name == "sinks") return suite_sinks(cfg);
    if (name == "positivity") return suite_positivity(cfg);
    if (name == "families") return suite_families(cfg);
    if (name == "reconstruction") return suite_reconstruction(cfg);
    if (name == "all") {
        VerifyReport merged;
        merged.suite = "all";
        for (const auto& n : verify_suite_names()) {
            VerifyReport r = run_verify_suite(n, cfg);
            for (auto& c : r.cases) {
                c.name = r.suite + ": " + c.name;
                merged.cases.push_back(std::move(c));
            }
        }
        return merged;
    }
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace ncsym
