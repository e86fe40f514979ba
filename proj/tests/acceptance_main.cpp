// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Exits nonzero if any criterion fails or runs past its time budget.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ncsym/chromatic.hpp"
#include "ncsym/graph.hpp"
#include "ncsym/io.hpp"
#include "ncsym/nc_expr.hpp"
#include "ncsym/rational.hpp"
#include "ncsym/set_partition.hpp"

using namespace ncsym;

namespace {

int criterion_no = 0;
int failed = 0;

template <class F>
void criterion(const std::string& name, double budget_s, F&& body) {
    ++criterion_no;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && budget_s > 0 && s > budget_s)
        detail = "exceeded time budget of " + std::to_string(budget_s) + " s";
    if (detail.empty()) {
        std::printf("criterion %2d: pass  (%6.2fs)  %s\n", criterion_no, s, name.c_str());
    } else {
        std::printf("criterion %2d: FAIL  (%6.2fs)  %s\n    %s\n", criterion_no, s, name.c_str(),
                    detail.c_str());
        ++failed;
    }
    std::fflush(stdout);
}

std::string ok() { return {}; }

SetPartition sp(const std::string& s) { return parse_slash_string(s); }

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

bool is_connected(const LabeledMultigraph& g) {
    const int d = g.vertex_count();
    std::vector<std::vector<int>> adj(d + 1);
    for (const auto& [a, b] : g.edges())
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<bool> seen(d + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == d;
}

// All C(d,2) vertex pairs in a fixed order, for mask-indexed simple graphs.
std::vector<std::pair<int, int>> vertex_pairs(int d) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) ps.emplace_back(i, j);
    return ps;
}

LabeledMultigraph graph_from_mask(int d, const std::vector<std::pair<int, int>>& pairs,
                                  std::uint32_t mask) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) es.push_back(pairs[i]);
    return LabeledMultigraph(d, std::move(es));
}

std::string routes_agree(const LabeledMultigraph& g, const std::string& label) {
    const NCExpr ref = y_stable(g);
    if (!(to_basis(y_delcon(g), Basis::M) == ref))
        return "deletion-contraction route disagrees on " + label;
    if (!(to_basis(y_subsets_p(g), Basis::M) == ref))
        return "edge-subset route disagrees on " + label;
    if (!(to_basis(y_broken_circuit_p(g), Basis::M) == ref))
        return "broken-circuit route disagrees on " + label;
    return ok();
}

std::string check_sink_counts(const LabeledMultigraph& g) {
    const std::string label = g.canonical_key();
    const int d = g.vertex_count();
    std::map<int, long long> unique_at;
    std::map<int, long long> by_sink_count;
    for (std::uint32_t o : acyclic_orientations(g)) {
        const auto sinks = orientation_sinks(g, o);
        ++by_sink_count[static_cast<int>(sinks.size())];
        if (sinks.size() == 1) ++unique_at[sinks[0]];
    }
    const long long via_e = unique_sink_count_via_e(g);
    for (int v = 1; v <= d; ++v) {
        if (unique_at[v] != via_e)
            return "coefficient count " + std::to_string(via_e) + " != enumerated " +
                   std::to_string(unique_at[v]) + " at vertex " + std::to_string(v) + " of " + label;
        if (count_unique_sink(g, v) != unique_at[v])
            return "recursive count disagrees with enumeration at vertex " + std::to_string(v) +
                   " of " + label;
    }
    const auto dist = sink_distribution_via_e(g);
    if (dist.size() != by_sink_count.size())
        return "sink distribution support differs on " + label;
    for (const auto& [j, c] : by_sink_count)
        if (dist.count(j) == 0 || dist.at(j) != to_rat(c))
            return "sink distribution differs at " + std::to_string(j) + " sinks on " + label;
    return ok();
}

}  // namespace

int main() {
    const RunConfig cfg = default_config();

    criterion("three-vertex path: monomial, elementary, and amalgamated class forms", 1, [&] {
        const NCExpr y = y_stable(path_graph(3));
        NCExpr want_m(3, Basis::M);
        want_m.add_term(sp("13/2"), 1);
        want_m.add_term(sp("1/2/3"), 1);
        if (!(y == want_m)) return std::string("monomial form mismatch: ") + render_expr(y);
        const NCExpr e = to_basis(y, Basis::E);
        NCExpr want_e(3, Basis::E);
        want_e.add_term(sp("12/3"), ratio(1, 2));
        want_e.add_term(sp("13/2"), ratio(-1, 2));
        want_e.add_term(sp("1/23"), ratio(1, 2));
        want_e.add_term(sp("123"), ratio(1, 2));
        if (!(e == want_e)) return std::string("elementary form mismatch: ") + render_expr(e);
        EClassExpr want_c(3, 3);
        want_c.add_term({IntegerPartition({2, 1}), 1}, ratio(1, 2));
        want_c.add_term({IntegerPartition({3}), 3}, ratio(1, 2));
        if (!(amalgamate(e, 3) == want_c)) return std::string("class form mismatch");
        return ok();
    });

    criterion("power-sum and elementary expansions into monomials at degree 4", 1, [&] {
        NCExpr want_p(4, Basis::M);
        want_p.add_term(sp("13/24"), 1);
        want_p.add_term(sp("1234"), 1);
        if (!(to_basis(NCExpr::unit(Basis::P, sp("13/24")), Basis::M) == want_p))
            return std::string("power-sum expansion mismatch at 13/24");
        NCExpr want_e(4, Basis::M);
        for (const char* s : {"12/34", "14/23", "12/3/4", "1/23/4", "1/2/34", "14/2/3", "1/2/3/4"})
            want_e.add_term(sp(s), 1);
        if (!(to_basis(NCExpr::unit(Basis::E, sp("13/24")), Basis::M) == want_e))
            return std::string("elementary expansion mismatch at 13/24");
        return ok();
    });

    criterion("four computation routes agree on small multigraphs and 200 random graphs", 300, [&] {
        for (int d = 1; d <= 4; ++d)
            for (const auto& g : multigraphs_up_to_relabeling(d, 6))
                if (auto err = routes_agree(g, g.canonical_key()); !err.empty()) return err;
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> deg(5, 7);
        std::uniform_int_distribution<int> ecount(0, 12);
        for (int i = 0; i < 200; ++i) {
            const int d = deg(rng);
            std::uniform_int_distribution<int> vert(1, d);
            std::vector<std::pair<int, int>> es;
            const int m = ecount(rng);
            for (int k = 0; k < m; ++k) {
                const int a = vert(rng), b = vert(rng);
                es.emplace_back(a, b);
            }
            const LabeledMultigraph g(d, std::move(es));
            if (auto err = routes_agree(g, "random sample " + std::to_string(i)); !err.empty())
                return err;
        }
        return ok();
    });

    criterion("basis changes round-trip exactly through degree 6", 60, [&] {
        const Basis bases[3] = {Basis::M, Basis::P, Basis::E};
        for (int d = 1; d <= 6; ++d)
            for (const auto& pi : enumerate_partitions(d))
                for (Basis from : bases)
                    for (Basis to : bases) {
                        if (from == to) continue;
                        const NCExpr x = NCExpr::unit(from, pi);
                        if (!(to_basis(to_basis(x, to), from) == x))
                            return std::string(1, basis_char(from)) + "->" + basis_char(to) +
                                   "->" + basis_char(from) + " round trip broke at " +
                                   slash_string(pi);
                    }
        return ok();
    });

    criterion("induced elementary coefficient groups sum to 1/b, -1/b, or 0 (degree <= 5)", 120, [&] {
        for (int d = 1; d <= 5; ++d)
            for (const auto& pi : enumerate_partitions(d)) {
                const NCExpr up = induce(NCExpr::unit(Basis::E, pi));
                const Rat inv_b = ratio(1, pi.block_size_of(d));
                const SetPartition fresh = new_singleton(pi);
                const SetPartition grown = insert_into_block_of_last(pi);
                for (const auto& alpha : compositions_of(d + 1)) {
                    const auto members = enumerate_Palpha(pi, alpha, d + 1);
                    Rat sum;
                    for (const auto& tau : members) sum += up.coeff(tau);
                    Rat want = 0;
                    if (members.size() == 1 && members[0] == fresh) want = inv_b;
                    if (members.size() == 1 && members[0] == grown) want = -inv_b;
                    if (sum != want) {
                        std::string parts;
                        for (int p : alpha.parts) parts += std::to_string(p) + " ";
                        return "group sum " + rat_str(sum) + " != " + rat_str(want) + " at " +
                               slash_string(pi) + ", sizes " + parts;
                    }
                }
            }
        return ok();
    });

    criterion("elementary coefficients count acyclic orientations by sinks (degree <= 5)", 0, [&] {
        for (int d = 1; d <= 5; ++d)
            for (const auto& g : simple_graphs_up_to_relabeling(d)) {
                if (!is_connected(g)) continue;
                if (auto err = check_sink_counts(g); !err.empty()) return err;
                if (g.edge_count() > 0) {
                    auto es = g.edges();
                    es.push_back(es.front());
                    if (auto err = check_sink_counts(LabeledMultigraph(d, std::move(es)));
                        !err.empty())
                        return err;
                }
            }
        return ok();
    });

    criterion("chromatic polynomial linear coefficient counts unique-sink orientations", 0, [&] {
        for (int d = 1; d <= 5; ++d)
            for (const auto& g : simple_graphs_up_to_relabeling(d)) {
                if (!is_connected(g)) continue;
                Rat a1 = chromatic_polynomial(g).coeff(1);
                if (a1 < 0) a1 = -a1;
                for (int v = 1; v <= d; ++v)
                    if (a1 != to_rat(count_unique_sink(g, v)))
                        return "|a_1| = " + rat_str(a1) + " misses the count at vertex " +
                               std::to_string(v) + " of " + g.canonical_key();
            }
        return ok();
    });

    criterion("complete-minus-edge closed forms match scratch values through degree 7", 0, [&] {
        for (int d = 2; d <= 7; ++d) {
            const auto tag = " at degree " + std::to_string(d);
            const EClassExpr cf = closed_form_kd_minus_e(d);
            if (!(cf == e_class_expansion(complete_minus_edge(d))))
                return "class closed form differs from scratch" + tag;
            if (cf.coeff({IntegerPartition({d}), d}) != ratio(d - 2, d - 1))
                return "one-block class coefficient is not (d-2)/(d-1)" + tag;
            if (cf.coeff({IntegerPartition({d - 1, 1}), 1}) != ratio(1, d - 1))
                return "split class coefficient is not 1/(d-1)" + tag;
            const CExpr x = x_commutative(complete_minus_edge(d), Basis::E);
            if (!(closed_form_x_kd_minus_e(d) == x))
                return "commutative closed form differs from scratch" + tag;
            const long long f = factorial_ll(d - 2);
            if (x.coeff(IntegerPartition({d})) != to_rat(d * (d - 2) * f))
                return "e_(d) coefficient is not d(d-2)(d-2)!" + tag;
            if (x.coeff(IntegerPartition({d - 1, 1})) != to_rat(f))
                return "e_(d-1,1) coefficient is not (d-2)!" + tag;
            if (x.terms().size() != (d == 2 ? 1u : 2u)) return "unexpected extra terms" + tag;
        }
        return ok();
    });

    criterion("class positivity of paths, cycles, clique chains, and attachments", 600, [&] {
        for (int d = 1; d <= 8; ++d) {
            if (!is_e_class_positive(path_graph(d)))
                return "path on " + std::to_string(d) + " vertices is not class-positive";
            if (!is_e_class_positive(cycle_graph(d)))
                return "cycle on " + std::to_string(d) + " vertices is not class-positive";
        }
        for (int n = 1; n <= 8; ++n)
            for (const auto& alpha : compositions_of(n))
                if (!is_e_class_positive(k_alpha_chain(alpha))) {
                    std::string parts;
                    for (int p : alpha.parts) parts += std::to_string(p) + ",";
                    return "clique chain (" + parts + ") is not class-positive";
                }
        for (int d = 1; d <= 4; ++d) {
            const auto pairs = vertex_pairs(d);
            for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
                const LabeledMultigraph g = graph_from_mask(d, pairs, mask);
                const EClassExpr base = e_class_expansion(g);
                for (int m = 2; m <= 4; ++m)
                    if (!(attach_km_closed_form(base, m) ==
                          e_class_expansion(attach_complete(g, m))))
                        return "clique attachment closed form differs from scratch on " +
                               g.canonical_key() + " with m = " + std::to_string(m);
            }
        }
        for (const auto& g : {complete_graph(1), complete_graph(2), path_graph(3)})
            if (!attach_diamond_positivity_check(g))
                return "diamond attachment loses positivity on " + g.canonical_key();
        return ok();
    });

    criterion("chromatic polynomial matches brute-force coloring counts", 0, [&] {
        std::vector<LabeledMultigraph> corpus{
            path_graph(1),
            path_graph(4),
            path_graph(6),
            cycle_graph(3),
            cycle_graph(5),
            complete_graph(4),
            complete_graph(5),
            complete_minus_edge(5),
            empty_graph(4),
            k_alpha_chain(Composition({3, 3})),
            k_alpha_chain(Composition({2, 2, 2})),
            diamond_graph(),
            attach_diamond(path_graph(3)),
            disjoint_union(path_graph(3), cycle_graph(3)),
            indifference_graph({{1, 4}, {2, 5}}),
            LabeledMultigraph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}),
            LabeledMultigraph(3, {{1, 1}, {2, 3}}),
            LabeledMultigraph(3, {{1, 2}, {1, 2}, {2, 3}}),
        };
        for (const auto& g : corpus) {
            const UniPoly p = chromatic_polynomial(g);
            for (int n = 0; n <= g.vertex_count() + 1; ++n)
                if (p.eval(n) != to_rat(static_cast<long long>(proper_coloring_count(g, n))))
                    return "polynomial and brute force differ at " + std::to_string(n) +
                           " colors on " + g.canonical_key();
        }
        return ok();
    });

    criterion("reconstruction inverts the stable-partition expansion (degree <= 6)", 0, [&] {
        for (int d = 1; d <= 5; ++d) {
            const auto pairs = vertex_pairs(d);
            for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
                const LabeledMultigraph g = graph_from_mask(d, pairs, mask);
                if (!(reconstruct_from_y(y_stable(g), d) == g))
                    return "reconstruction missed " + g.canonical_key();
            }
        }
        const auto pairs = vertex_pairs(6);
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint32_t> mask(0, (1u << pairs.size()) - 1);
        for (int i = 0; i < 40; ++i) {
            const LabeledMultigraph g = graph_from_mask(6, pairs, mask(rng));
            if (!(reconstruct_from_y(y_stable(g), 6) == g))
                return "reconstruction missed sampled " + g.canonical_key();
        }
        return ok();
    });

    criterion("non-isomorphic trees through degree 8 have distinct commutative images", 600, [&] {
        const int want_counts[] = {1, 1, 1, 2, 3, 6, 11, 23};
        for (int d = 1; d <= 8; ++d) {
            const TreeExperiment r = tree_experiment(d);
            if (r.tree_count != want_counts[d - 1])
                return "expected " + std::to_string(want_counts[d - 1]) + " trees on " +
                       std::to_string(d) + " vertices, enumerated " + std::to_string(r.tree_count);
            if (!r.x_all_distinct)
                return "two trees on " + std::to_string(d) + " vertices share an image";
        }
        return ok();
    });

    if (failed == 0) {
        std::printf("acceptance: all %d criteria passed\n", criterion_no);
        return 0;
    }
    std::printf("acceptance: %d of %d criteria FAILED\n", failed, criterion_no);
    return 1;
}
