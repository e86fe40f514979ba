#include "ncsym/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace ncsym {

std::string route_name(YRoute r) {
    switch (r) {
        case YRoute::Stable: return "stable";
        case YRoute::DelCon: return "delcon";
        case YRoute::Subsets: return "subsets";
        case YRoute::BrokenCircuit: return "broken";
    }
    throw std::logic_error("route_name: bad route");
}

YRoute route_from_name(const std::string& name) {
    if (name == "stable") return YRoute::Stable;
    if (name == "delcon") return YRoute::DelCon;
    if (name == "subsets") return YRoute::Subsets;
    if (name == "broken") return YRoute::BrokenCircuit;
    throw std::invalid_argument("unknown route '" + name + "'");
}

NCExpr y_stable(const LabeledMultigraph& g, const RunConfig& cfg) {
    NCExpr y(g.vertex_count(), Basis::M);
    for (const auto& p : stable_partitions(g, cfg)) y.add_term(p, Rat(1));
    return y;
}

namespace {

void check_degree_guard(const LabeledMultigraph& g, const RunConfig& cfg) {
    if (g.vertex_count() > cfg.degree_guard)
        throw GuardLimitError("degree guard exceeded: d = " + std::to_string(g.vertex_count()) +
                              " > " + std::to_string(cfg.degree_guard));
}

int last_nonloop_edge(const LabeledMultigraph& g) {
    for (int id = g.edge_count() - 1; id >= 0; --id)
        if (!g.is_loop(id)) return id;
    return -1;
}

using Memo = std::map<std::string, NCExpr>;

NCExpr y_delcon_rec(const LabeledMultigraph& g, Memo& memo) {
    const int d = g.vertex_count();
    if (g.has_loops()) return NCExpr(d, Basis::P);
    if (g.edge_count() == 0) return NCExpr::unit(Basis::P, SetPartition::singletons(d));
    std::string key = g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int id = last_nonloop_edge(g);
    const auto [k, l] = g.edge(id);
    NCExpr y = y_delcon_rec(g.delete_edge(id), memo) -
               induce_at(y_delcon_rec(g.contract_edge(id), memo), k, l);
    memo.emplace(std::move(key), y);
    return y;
}

NCExpr y_delcon_relabel_rec(const LabeledMultigraph& g, Memo& memo) {
    const int d = g.vertex_count();
    if (g.has_loops()) return NCExpr(d, Basis::P);
    if (g.edge_count() == 0) return NCExpr::unit(Basis::P, SetPartition::singletons(d));
    std::string key = g.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int id = last_nonloop_edge(g);
    const auto [k, l] = g.edge(id);
    std::vector<int> img(d);
    int next = 1;
    for (int v = 1; v <= d; ++v) {
        if (v == k) img[v - 1] = d - 1;
        else if (v == l) img[v - 1] = d;
        else img[v - 1] = next++;
    }
    const Perm gamma(std::move(img));
    const LabeledMultigraph h = g.relabel(gamma);
    NCExpr yh = y_delcon_relabel_rec(h.delete_edge(id), memo) -
                induce(y_delcon_relabel_rec(h.contract_edge(id), memo));
    NCExpr y = act(gamma.inverse(), yh);
    memo.emplace(std::move(key), y);
    return y;
}

}  // namespace

NCExpr y_delcon(const LabeledMultigraph& g, const RunConfig& cfg) {
    check_degree_guard(g, cfg);
    Memo memo;
    return y_delcon_rec(g, memo);
}

NCExpr y_delcon_relabel(const LabeledMultigraph& g, const RunConfig& cfg) {
    check_degree_guard(g, cfg);
    Memo memo;
    return y_delcon_relabel_rec(g, memo);
}

NCExpr y_subsets_p(const LabeledMultigraph& g, const RunConfig& cfg) {
    check_degree_guard(g, cfg);
    const int m = g.edge_count();
    if (m > cfg.subset_guard)
        throw GuardLimitError("subset guard exceeded: |E| = " + std::to_string(m) + " > " +
                              std::to_string(cfg.subset_guard));
    NCExpr y(g.vertex_count(), Basis::P);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
        const bool odd = std::popcount(s) % 2 != 0;
        y.add_term(components_partition(g, static_cast<EdgeMask>(s)), odd ? Rat(-1) : Rat(1));
    }
    return y;
}

NCExpr y_broken_circuit_p(const LabeledMultigraph& g, const RunConfig& cfg) {
    check_degree_guard(g, cfg);
    NCExpr y(g.vertex_count(), Basis::P);
    for (EdgeMask s : broken_circuit_complex(g, cfg)) {
        const bool odd = std::popcount(s) % 2 != 0;
        y.add_term(components_partition(g, s), odd ? Rat(-1) : Rat(1));
    }
    return y;
}

YResult compute_y(const LabeledMultigraph& g, Basis basis, YRoute route, const RunConfig& cfg) {
    NCExpr y = [&] {
        switch (route) {
            case YRoute::Stable: return y_stable(g, cfg);
            case YRoute::DelCon: return y_delcon(g, cfg);
            case YRoute::Subsets: return y_subsets_p(g, cfg);
            case YRoute::BrokenCircuit: return y_broken_circuit_p(g, cfg);
        }
        throw std::logic_error("compute_y: bad route");
    }();
    return YResult{g, to_basis(y, basis), route};
}

CExpr x_commutative(const LabeledMultigraph& g, Basis basis, const RunConfig& cfg) {
    return commutative_image(to_basis(y_stable(g, cfg), basis));
}

UniPoly chromatic_polynomial(const LabeledMultigraph& g, const RunConfig& cfg) {
    return specialize_ones(y_stable(g, cfg));
}

long long unique_sink_count_via_e(const LabeledMultigraph& g, const RunConfig& cfg) {
    const int d = g.vertex_count();
    const Rat c = to_basis(y_stable(g, cfg), Basis::E).coeff(SetPartition::one_block(d));
    const Rat count = to_rat(factorial_ll(d - 1)) * c;
    if (!is_integer(count))
        throw std::logic_error("unique_sink_count_via_e: (d-1)! c_[d] is not an integer");
    return count.get_num().get_si();
}

std::map<int, Rat> sink_distribution_via_e(const LabeledMultigraph& g, const RunConfig& cfg) {
    std::map<int, Rat> dist;
    const CExpr x = x_commutative(g, Basis::E, cfg);
    for (const auto& [lambda, c] : x.terms()) dist[lambda.length()] += c;
    std::erase_if(dist, [](const auto& kv) { return kv.second == 0; });
    return dist;
}

EClassExpr e_class_expansion(const LabeledMultigraph& g, int marked, const RunConfig& cfg) {
    if (marked <= 0) marked = g.vertex_count();
    return amalgamate(to_basis(y_stable(g, cfg), Basis::E), marked);
}

bool is_e_class_positive(const LabeledMultigraph& g, int marked, const RunConfig& cfg) {
    return e_class_expansion(g, marked, cfg).is_nonneg();
}

PositivitySearch search_positive_labeling(const LabeledMultigraph& g, long long budget,
                                          const RunConfig& cfg) {
    if (budget < 0) budget = cfg.positivity_budget;
    const int d = g.vertex_count();
    const NCExpr ye = to_basis(y_stable(g, cfg), Basis::E);
    const long long total = factorial_ll(d);
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 1);
    PositivitySearch result;
    do {
        if (result.tried == budget) break;
        ++result.tried;
        const Perm delta(img);
        const NCExpr relabeled = act(delta, ye);
        for (int i = d; i >= 1; --i) {
            if (amalgamate(relabeled, i).is_nonneg()) {
                result.witness = PositivityWitness{delta, i};
                break;
            }
        }
        if (result.witness) break;
    } while (std::next_permutation(img.begin(), img.end()));
    result.exhaustive = result.tried == total;
    return result;
}

EClassExpr closed_form_kd_minus_e(int d) {
    if (d < 2) throw std::invalid_argument("closed_form_kd_minus_e: d must be at least 2");
    EClassExpr out(d, d);
    out.add_term({IntegerPartition({d}), d}, ratio(d - 2, d - 1));
    out.add_term({IntegerPartition({d - 1, 1}), 1}, ratio(1, d - 1));
    return out;
}

CExpr closed_form_x_kd_minus_e(int d) {
    if (d < 2) throw std::invalid_argument("closed_form_x_kd_minus_e: d must be at least 2");
    CExpr out(d, Basis::E);
    out.add_term(IntegerPartition({d}), to_rat(1LL * d * (d - 2) * factorial_ll(d - 2)));
    out.add_term(IntegerPartition({d - 1, 1}), to_rat(factorial_ll(d - 2)));
    return out;
}

namespace {

// Shape with one copy of the marked part removed.
std::vector<int> shape_without_marked(const ClassKey& key, const char* who) {
    auto parts = key.shape.parts;
    auto it = std::find(parts.begin(), parts.end(), key.marked_size);
    if (it == parts.end())
        throw std::invalid_argument(std::string(who) + ": marked size is not a part of the shape");
    parts.erase(it);
    return parts;
}

ClassKey grow_marked_block(const ClassKey& key) {
    auto parts = shape_without_marked(key, "grow_marked_block");
    parts.push_back(key.marked_size + 1);
    return {IntegerPartition(std::move(parts)), key.marked_size + 1};
}

}  // namespace

bool path_cycle_relation_check(int d, const RunConfig& cfg) {
    if (d < 1) throw std::invalid_argument("path_cycle_relation_check: d must be positive");
    EClassExpr expected(d + 1, d + 1);
    const EClassExpr paths = e_class_expansion(path_graph(d), d, cfg);
    for (const auto& [key, c] : paths.terms()) expected.add_term(grow_marked_block(key), c);
    return expected == e_class_expansion(cycle_graph(d + 1), d + 1, cfg);
}

EClassExpr attach_km_closed_form(const EClassExpr& classes, int m) {
    if (m < 2) throw std::invalid_argument("attach_km_closed_form: m must be at least 2");
    if (classes.marked() != classes.degree())
        throw std::invalid_argument("attach_km_closed_form: classes must be marked at the last element");
    const int d = classes.degree();
    const int n = m - 1;  // vertices added to the graph
    EClassExpr out(d + n, d + n);
    for (const auto& [key, c] : classes.terms()) {
        const int b = key.marked_size;
        const auto base = shape_without_marked(key, "attach_km_closed_form");
        for (int i = 0; i < n; ++i) {
            const Rat w = c * to_rat(falling_ll(n - 1, i)) / to_rat(rising_ll(b, i + 1));
            auto hat = base;
            hat.push_back(b + i);
            hat.push_back(n - i);
            out.add_term({IntegerPartition(std::move(hat)), n - i}, w * to_rat(b - n + i));
            auto bar = base;
            bar.push_back(b + i + 1);
            if (n - 1 - i > 0) bar.push_back(n - 1 - i);
            out.add_term({IntegerPartition(std::move(bar)), b + i + 1}, w * to_rat(i + 1));
        }
    }
    return out;
}

EClassExpr induce_power_closed_form(const EClassExpr& classes, int m) {
    if (m < 1) throw std::invalid_argument("induce_power_closed_form: m must be at least 1");
    if (classes.marked() != classes.degree())
        throw std::invalid_argument(
            "induce_power_closed_form: classes must be marked at the last element");
    const int d = classes.degree();
    EClassExpr out(d + m, d + m);
    for (const auto& [key, c] : classes.terms()) {
        const int b = key.marked_size;
        const auto base = shape_without_marked(key, "induce_power_closed_form");
        for (int i = 0; i < m; ++i) {
            const Rat w = c * to_rat(falling_ll(m - 1, i)) / to_rat(rising_ll(b, i + 1));
            auto plus = base;
            plus.push_back(b + i);
            plus.push_back(m - i);
            out.add_term({IntegerPartition(std::move(plus)), m - i}, w);
            auto minus = base;
            minus.push_back(b + i + 1);
            if (m - 1 - i > 0) minus.push_back(m - 1 - i);
            out.add_term({IntegerPartition(std::move(minus)), b + i + 1}, -w);
        }
    }
    return out;
}

bool jk_equivalence_check(const LabeledMultigraph& g, int m, int j, int k, const RunConfig& cfg) {
    if (!(1 <= j && j < k && k <= m))
        throw std::invalid_argument("jk_equivalence_check: need 1 <= j < k <= m");
    const int d = g.vertex_count();
    const NCExpr y = y_stable(attach_complete(g, m), cfg);
    const auto side = [&](int pos) {
        return amalgamate(to_basis(induce_at(y, d, d + pos), Basis::E), d);
    };
    return side(j) == side(k);
}

bool combine_check(const LabeledMultigraph& g, int i, int j, const RunConfig& cfg) {
    const int d = g.vertex_count();
    if (i == j || i < 1 || j < 1 || i > d || j > d)
        throw std::invalid_argument("combine_check: need distinct vertices i, j");
    const NCExpr lhs = induce_at(y_stable(g, cfg), i, d + 1);
    const LabeledMultigraph swapped = g.relabel(Perm::transposition(d, i, j));
    const NCExpr rhs = induce_at(y_stable(swapped, cfg), j, d + 1);
    return amalgamate(to_basis(lhs, Basis::E), d + 1) == amalgamate(to_basis(rhs, Basis::E), d + 1);
}

bool attach_diamond_positivity_check(const LabeledMultigraph& g, const RunConfig& cfg) {
    if (!is_e_class_positive(g, g.vertex_count(), cfg)) return false;
    const LabeledMultigraph gd = attach_diamond(g);
    return is_e_class_positive(gd, gd.vertex_count(), cfg);
}

LabeledMultigraph reconstruct_from_y(const NCExpr& y, int d, const RunConfig& cfg) {
    if (y.basis() != Basis::M)
        throw std::invalid_argument("reconstruct_from_y: expansion must be in the monomial basis");
    if (y.degree() != d) throw std::invalid_argument("reconstruct_from_y: degree mismatch");
    std::set<std::pair<int, int>> coblocked;
    for (const auto& [p, c] : y.terms()) {
        for (const auto& blk : p.blocks())
            for (std::size_t a = 0; a < blk.size(); ++a)
                for (std::size_t b = a + 1; b < blk.size(); ++b)
                    coblocked.emplace(blk[a], blk[b]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (!coblocked.count({i, j})) edges.emplace_back(i, j);
    LabeledMultigraph g(d, std::move(edges));
    if (y_stable(g, cfg) != y)
        throw std::invalid_argument(
            "reconstruct_from_y: input is not the stable-partition expansion of a simple graph");
    return g;
}

TreeExperiment tree_experiment(int d, const RunConfig& cfg) {
    const auto trees = enumerate_trees(d, cfg);
    TreeExperiment report;
    report.degree = d;
    report.tree_count = static_cast<int>(trees.size());
    report.x_all_distinct = true;
    report.y_reconstruction_ok = true;
    std::vector<CExpr> xs;
    std::vector<EClassExpr> classes;
    for (const auto& t : trees) {
        const NCExpr y = y_stable(t, cfg);
        if (!(reconstruct_from_y(y, d, cfg) == t)) report.y_reconstruction_ok = false;
        xs.push_back(commutative_image(to_basis(y, Basis::P)));
        classes.push_back(amalgamate(to_basis(y, Basis::E), d));
    }
    for (std::size_t a = 0; a < trees.size(); ++a) {
        for (std::size_t b = a + 1; b < trees.size(); ++b) {
            if (xs[a] == xs[b]) report.x_all_distinct = false;
            if (classes[a] == classes[b]) ++report.class_collision_pairs;
        }
    }
    return report;
}

}  // namespace ncsym
