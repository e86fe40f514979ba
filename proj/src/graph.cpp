#include "ncsym/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncsym {

LabeledMultigraph::LabeledMultigraph(int d, std::vector<std::pair<int, int>> edges)
    : d_(d), edges_(std::move(edges)) {
    if (d < 1) throw std::invalid_argument("LabeledMultigraph: need at least one vertex");
    if (d > 255) throw std::invalid_argument("LabeledMultigraph: too many vertices");
    for (auto& [u, v] : edges_) {
        if (u < 1 || u > d || v < 1 || v > d)
            throw std::invalid_argument("LabeledMultigraph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
}

std::pair<int, int> LabeledMultigraph::edge(int id) const {
    if (id < 0 || id >= edge_count())
        throw std::invalid_argument("LabeledMultigraph: bad edge id");
    return edges_[id];
}

bool LabeledMultigraph::is_loop(int id) const {
    auto [u, v] = edge(id);
    return u == v;
}

bool LabeledMultigraph::has_loops() const {
    for (const auto& [u, v] : edges_)
        if (u == v) return true;
    return false;
}

int LabeledMultigraph::nonloop_count() const {
    int n = 0;
    for (const auto& [u, v] : edges_) n += (u != v);
    return n;
}

bool LabeledMultigraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_)
        if (e.first == e.second || !seen.insert(e).second) return false;
    return true;
}

std::vector<int> LabeledMultigraph::degrees() const {
    std::vector<int> deg(d_, 0);
    for (const auto& [u, v] : edges_) {
        deg[u - 1] += 1;
        deg[v - 1] += 1;
    }
    return deg;
}

LabeledMultigraph LabeledMultigraph::delete_edge(int id) const {
    edge(id);  // validate
    auto es = edges_;
    es.erase(es.begin() + id);
    return LabeledMultigraph(d_, std::move(es));
}

LabeledMultigraph LabeledMultigraph::contract_edge(int id) const {
    auto [k, l] = edge(id);
    if (k == l) return delete_edge(id);
    if (d_ < 2) throw std::logic_error("contract_edge: impossible degree");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size() - 1);
    auto remap = [k = k, l = l](int x) {
        if (x == l) x = k;
        return x > l ? x - 1 : x;
    };
    for (int i = 0; i < edge_count(); ++i) {
        if (i == id) continue;
        es.emplace_back(remap(edges_[i].first), remap(edges_[i].second));
    }
    return LabeledMultigraph(d_ - 1, std::move(es));
}

LabeledMultigraph LabeledMultigraph::relabel(const Perm& delta) const {
    if (delta.degree() != d_) throw std::invalid_argument("relabel: degree mismatch");
    auto es = edges_;
    for (auto& [u, v] : es) {
        u = delta(u);
        v = delta(v);
    }
    return LabeledMultigraph(d_, std::move(es));
}

bool LabeledMultigraph::operator==(const LabeledMultigraph& other) const {
    if (d_ != other.d_ || edges_.size() != other.edges_.size()) return false;
    auto a = edges_;
    auto b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string LabeledMultigraph::canonical_key() const {
    auto es = edges_;
    std::sort(es.begin(), es.end());
    std::string key = std::to_string(d_) + ":";
    for (const auto& [u, v] : es)
        key += std::to_string(u) + "-" + std::to_string(v) + ";";
    return key;
}

LabeledMultigraph path_graph(int d) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < d; ++i) es.emplace_back(i, i + 1);
    return LabeledMultigraph(d, std::move(es));
}

LabeledMultigraph cycle_graph(int d) {
    if (d == 1) return LabeledMultigraph(1, {{1, 1}});
    auto es = path_graph(d).edges();
    es.emplace_back(1, d);
    return LabeledMultigraph(d, std::move(es));
}

LabeledMultigraph complete_graph(int d) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) es.emplace_back(i, j);
    return LabeledMultigraph(d, std::move(es));
}

LabeledMultigraph complete_minus_edge(int d) {
    if (d < 2) throw std::invalid_argument("complete_minus_edge: need at least two vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (!(i == d - 1 && j == d)) es.emplace_back(i, j);
    return LabeledMultigraph(d, std::move(es));
}

LabeledMultigraph empty_graph(int d) { return LabeledMultigraph(d, {}); }

LabeledMultigraph complement_graph(const LabeledMultigraph& g) {
    const int d = g.vertex_count();
    std::set<std::pair<int, int>> present;
    for (const auto& e : g.edges())
        if (e.first != e.second) present.insert(e);
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (!present.count({i, j})) es.emplace_back(i, j);
    return LabeledMultigraph(d, std::move(es));
}

LabeledMultigraph disjoint_union(const LabeledMultigraph& a, const LabeledMultigraph& b) {
    const int off = a.vertex_count();
    auto es = a.edges();
    for (const auto& [u, v] : b.edges()) es.emplace_back(u + off, v + off);
    return LabeledMultigraph(off + b.vertex_count(), std::move(es));
}

LabeledMultigraph add_isolated_vertex(const LabeledMultigraph& g) {
    return LabeledMultigraph(g.vertex_count() + 1, g.edges());
}

LabeledMultigraph indifference_graph(const std::vector<std::pair<int, int>>& intervals) {
    int d = 0;
    for (const auto& [l, r] : intervals) {
        if (l < 1 || r < l) throw std::invalid_argument("indifference_graph: malformed interval");
        d = std::max(d, r);
    }
    if (d == 0) throw std::invalid_argument("indifference_graph: no intervals");
    std::set<std::pair<int, int>> es;
    for (const auto& [l, r] : intervals)
        for (int i = l; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) es.insert({i, j});
    return LabeledMultigraph(d, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

LabeledMultigraph k_alpha_chain(const Composition& alpha) {
    if (alpha.length() == 0) throw std::invalid_argument("k_alpha_chain: empty composition");
    std::vector<std::pair<int, int>> es;
    int lo = 1, d = 1;
    for (int part : alpha.parts) {
        const int hi = lo + part - 1;
        for (int i = lo; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j) es.emplace_back(i, j);
        d = hi;
        lo = hi;
    }
    return LabeledMultigraph(d, std::move(es));
}

LabeledMultigraph attach_complete(const LabeledMultigraph& g, int m) {
    if (m < 1) throw std::invalid_argument("attach_complete: clique size must be positive");
    const int d = g.vertex_count();
    auto es = g.edges();
    for (int i = d; i <= d + m - 1; ++i)
        for (int j = i + 1; j <= d + m - 1; ++j) es.emplace_back(i, j);
    return LabeledMultigraph(d + m - 1, std::move(es));
}

LabeledMultigraph diamond_graph() { return indifference_graph({{1, 3}, {2, 4}}); }

LabeledMultigraph attach_diamond(const LabeledMultigraph& g) {
    const int d = g.vertex_count();
    auto es = g.edges();
    es.emplace_back(d, d + 1);
    es.emplace_back(d, d + 2);
    es.emplace_back(d + 1, d + 2);
    es.emplace_back(d + 1, d + 3);
    es.emplace_back(d + 2, d + 3);
    return LabeledMultigraph(d + 3, std::move(es));
}

std::vector<SetPartition> stable_partitions(const LabeledMultigraph& g, const RunConfig& cfg) {
    std::vector<SetPartition> out;
    if (g.has_loops()) return out;
    for_each_partition(
        g.vertex_count(),
        [&](const SetPartition& p) {
            for (const auto& [u, v] : g.edges())
                if (p.block_of(u) == p.block_of(v)) return;
            out.push_back(p);
        },
        cfg);
    return out;
}

unsigned long long proper_coloring_count(const LabeledMultigraph& g, int n_colors,
                                         const RunConfig& cfg) {
    if (n_colors < 0) throw std::invalid_argument("proper_coloring_count: negative color count");
    const int d = g.vertex_count();
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= std::max(n_colors, 1);
        if (size > cfg.word_guard)
            throw GuardLimitError("coloring guard exceeded: " + std::to_string(n_colors) + "^" +
                                  std::to_string(d) + " > " + std::to_string(cfg.word_guard));
    }
    // edges into already-colored vertices, checked as each vertex is assigned
    std::vector<std::vector<std::pair<int, int>>> back(d + 1);
    for (const auto& [u, v] : g.edges()) back[v].emplace_back(u, v);
    std::vector<int> color(d + 1, 0);
    unsigned long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > d) {
            ++count;
            return;
        }
        for (int c = 1; c <= n_colors; ++c) {
            color[v] = c;
            bool ok = true;
            for (const auto& [a, b] : back[v])
                if (color[a] == c) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
        color[v] = 0;
    };
    rec(rec, 1);
    return count;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

SetPartition components_partition(const LabeledMultigraph& g, EdgeMask s) {
    const int d = g.vertex_count();
    UnionFind uf(d);
    for (int i = 0; i < g.edge_count(); ++i)
        if ((s >> i) & 1) {
            auto [u, v] = g.edge(i);
            uf.unite(u - 1, v - 1);
        }
    std::vector<std::uint8_t> raw(d);
    for (int v = 0; v < d; ++v) raw[v] = static_cast<std::uint8_t>(uf.find(v));
    return SetPartition::from_labels(std::move(raw));
}

std::vector<EdgeMask> circuits(const LabeledMultigraph& g, const RunConfig& cfg) {
    const int m = g.edge_count();
    if (m > cfg.subset_guard)
        throw GuardLimitError("subset guard exceeded: |E| = " + std::to_string(m) + " > " +
                              std::to_string(cfg.subset_guard));
    const int d = g.vertex_count();
    std::vector<EdgeMask> out;
    std::vector<int> deg(d + 1);
    for (EdgeMask s = 1; s < (EdgeMask(1) << m); ++s) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1) {
                auto [u, v] = g.edge(i);
                deg[u] += 1;
                deg[v] += 1;  // a loop contributes two to its vertex
            }
        bool ok = true;
        for (int v = 1; v <= d && ok; ++v)
            if (deg[v] != 0 && deg[v] != 2) ok = false;
        if (!ok) continue;
        // connectivity over the touched vertices
        UnionFind uf(d);
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1) {
                auto [u, v] = g.edge(i);
                uf.unite(u - 1, v - 1);
            }
        int root = -1;
        for (int v = 1; v <= d && ok; ++v)
            if (deg[v] != 0) {
                int r = uf.find(v - 1);
                if (root < 0)
                    root = r;
                else if (root != r)
                    ok = false;
            }
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<EdgeMask> broken_circuits(const LabeledMultigraph& g, const RunConfig& cfg) {
    std::set<EdgeMask> bcs;
    for (EdgeMask c : circuits(g, cfg)) {
        const int top = std::bit_width(c) - 1;
        bcs.insert(c & ~(EdgeMask(1) << top));
    }
    // keep only minimal ones
    std::vector<EdgeMask> out;
    for (EdgeMask b : bcs) {
        bool minimal = true;
        for (EdgeMask o : bcs)
            if (o != b && (b & o) == o) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(b);
    }
    return out;
}

std::vector<EdgeMask> broken_circuit_complex(const LabeledMultigraph& g, const RunConfig& cfg) {
    const int m = g.edge_count();
    auto bcs = broken_circuits(g, cfg);
    for (EdgeMask b : bcs)
        if (b == 0) return {};  // a loop breaks to the empty set: nothing survives
    std::vector<std::vector<EdgeMask>> by_max(m);
    for (EdgeMask b : bcs) by_max[std::bit_width(b) - 1].push_back(b);
    std::vector<EdgeMask> out;
    auto rec = [&](auto&& self, int next, EdgeMask s) -> void {
        out.push_back(s);
        for (int e = next; e < m; ++e) {
            const EdgeMask with = s | (EdgeMask(1) << e);
            bool ok = true;
            for (EdgeMask b : by_max[e])
                if ((b & ~with) == 0) {
                    ok = false;
                    break;
                }
            if (ok) self(self, e + 1, with);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {
// Kahn toposort over the arcs selected by the orientation mask.
bool orientation_is_acyclic(const LabeledMultigraph& g, std::uint32_t mask) {
    const int d = g.vertex_count();
    std::vector<std::vector<int>> out(d + 1);
    std::vector<int> indeg(d + 1, 0);
    int bit = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge(i);
        if (u == v) return false;
        if ((mask >> bit) & 1) std::swap(u, v);
        out[u].push_back(v);
        indeg[v] += 1;
        ++bit;
    }
    std::vector<int> queue;
    for (int v = 1; v <= d; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == d;
}
}  // namespace

std::vector<std::uint32_t> acyclic_orientations(const LabeledMultigraph& g,
                                                const RunConfig& cfg) {
    std::vector<std::uint32_t> out;
    if (g.has_loops()) return out;
    const int k = g.nonloop_count();
    if (k > cfg.orientation_guard)
        throw GuardLimitError("orientation guard exceeded: " + std::to_string(k) +
                              " non-loop edges > " + std::to_string(cfg.orientation_guard));
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << k); ++mask)
        if (orientation_is_acyclic(g, mask)) out.push_back(mask);
    return out;
}

std::vector<int> orientation_sinks(const LabeledMultigraph& g, std::uint32_t orientation) {
    const int d = g.vertex_count();
    std::vector<char> has_out(d + 1, 0);
    int bit = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge(i);
        if (u == v) throw std::invalid_argument("orientation_sinks: graph has a loop");
        if ((orientation >> bit) & 1) std::swap(u, v);
        has_out[u] = 1;
        ++bit;
    }
    std::vector<int> sinks;
    for (int v = 1; v <= d; ++v)
        if (!has_out[v]) sinks.push_back(v);
    return sinks;
}

long long count_unique_sink(const LabeledMultigraph& g, int v0, const RunConfig& cfg) {
    if (v0 < 1 || v0 > g.vertex_count())
        throw std::invalid_argument("count_unique_sink: vertex out of range");
    long long n = 0;
    for (std::uint32_t mask : acyclic_orientations(g, cfg)) {
        auto s = orientation_sinks(g, mask);
        n += (s.size() == 1 && s[0] == v0);
    }
    return n;
}

std::map<int, long long> sink_distribution(const LabeledMultigraph& g, const RunConfig& cfg) {
    std::map<int, long long> hist;
    for (std::uint32_t mask : acyclic_orientations(g, cfg))
        hist[static_cast<int>(orientation_sinks(g, mask).size())] += 1;
    return hist;
}

namespace {

std::vector<std::vector<int>> adjacency_counts(const LabeledMultigraph& g) {
    const int d = g.vertex_count();
    std::vector<std::vector<int>> adj(d + 1, std::vector<int>(d + 1, 0));
    for (const auto& [u, v] : g.edges()) {
        adj[u][v] += 1;
        if (u != v) adj[v][u] += 1;
    }
    return adj;
}

// Iterated neighborhood color refinement.  Colors are renumbered by sorted
// signature each round, so corresponding vertices of isomorphic graphs end up
// with equal colors; the sorted color vector is an isomorphism invariant and
// the per-vertex colors prune the matching search.
std::vector<int> wl_colors(const LabeledMultigraph& g) {
    const int d = g.vertex_count();
    auto adj = adjacency_counts(g);
    std::vector<int> color(d + 1, 0);
    for (int v = 1; v <= d; ++v) color[v] = adj[v][v];  // loop count seeds
    using Key = std::pair<int, std::vector<std::pair<int, int>>>;
    for (int round = 0; round < d; ++round) {
        std::vector<Key> keys(d + 1);
        for (int v = 1; v <= d; ++v) {
            std::vector<std::pair<int, int>> sig;
            for (int w = 1; w <= d; ++w)
                if (w != v && adj[v][w] > 0) sig.emplace_back(color[w], adj[v][w]);
            std::sort(sig.begin(), sig.end());
            keys[v] = {color[v], std::move(sig)};
        }
        std::vector<Key> uniq(keys.begin() + 1, keys.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 1; v <= d; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), keys[v]) - uniq.begin());
    }
    return color;
}

}  // namespace

bool is_isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b, const RunConfig& cfg) {
    const int d = a.vertex_count();
    if (d != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (d > cfg.degree_guard)
        throw GuardLimitError("degree guard exceeded: d = " + std::to_string(d) + " > " +
                              std::to_string(cfg.degree_guard));
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    auto ca = wl_colors(a), cb = wl_colors(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin() + 1, sa.end());
        std::sort(sb.begin() + 1, sb.end());
        if (sa != sb) return false;
    }
    auto adja = adjacency_counts(a), adjb = adjacency_counts(b);
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return ca[x] < ca[y]; });
    std::vector<int> img(d + 1, 0);
    std::vector<char> used(d + 1, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == d) return true;
        const int u = order[i];
        for (int w = 1; w <= d; ++w) {
            if (used[w] || cb[w] != ca[u] || adjb[w][w] != adja[u][u]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                const int x = order[j];
                if (adja[u][x] != adjb[w][img[x]]) ok = false;
            }
            if (!ok) continue;
            img[u] = w;
            used[w] = 1;
            if (self(self, i + 1)) return true;
            used[w] = 0;
            img[u] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

namespace {
// Smallest-leaf elimination; every labeled tree arises from exactly one sequence.
LabeledMultigraph tree_from_pruefer(int d, const std::vector<int>& seq) {
    std::vector<int> deg(d + 1, 1);
    for (int v : seq) deg[v] += 1;
    std::vector<std::pair<int, int>> es;
    std::vector<char> done(d + 1, 0);
    for (int v : seq) {
        for (int w = 1; w <= d; ++w)
            if (!done[w] && deg[w] == 1) {
                done[w] = 1;
                es.emplace_back(w, v);
                --deg[v];
                break;
            }
    }
    std::vector<int> rest;
    for (int w = 1; w <= d; ++w)
        if (!done[w]) rest.push_back(w);
    es.emplace_back(rest[0], rest[1]);
    std::sort(es.begin(), es.end());
    return LabeledMultigraph(d, std::move(es));
}
}  // namespace

std::vector<LabeledMultigraph> enumerate_trees(int d, const RunConfig& cfg) {
    if (d < 1) throw std::invalid_argument("enumerate_trees: need at least one vertex");
    if (d > 8)
        throw GuardLimitError("enumerate_trees: d = " + std::to_string(d) + " > 8");
    if (d == 1) return {empty_graph(1)};
    if (d == 2) return {path_graph(2)};
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    std::vector<LabeledMultigraph> reps;
    std::vector<int> seq(d - 2, 1);
    for (;;) {
        auto t = tree_from_pruefer(d, seq);
        auto sig = wl_colors(t);
        std::sort(sig.begin() + 1, sig.end());
        auto& bucket = buckets[sig];
        bool fresh = true;
        for (std::size_t idx : bucket)
            if (is_isomorphic(reps[idx], t, cfg)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(reps.size());
            reps.push_back(std::move(t));
        }
        int i = d - 3;
        while (i >= 0 && seq[i] == d) {
            seq[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
    return reps;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Lexicographic minimum of the sorted edge list over all relabelings.
EdgeList relabel_min(int d, const EdgeList& edges) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 1);
    EdgeList best;
    bool have = false;
    do {
        EdgeList cur;
        cur.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            const int a = img[u - 1], b = img[v - 1];
            cur.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(cur.begin(), cur.end());
        if (!have || cur < best) {
            best = std::move(cur);
            have = true;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return best;
}

}  // namespace

std::vector<LabeledMultigraph> multigraphs_up_to_relabeling(int d, int max_edges) {
    if (d < 1 || max_edges < 0)
        throw std::invalid_argument("multigraphs_up_to_relabeling: bad parameters");
    if (d > 6) throw GuardLimitError("multigraphs_up_to_relabeling: d > 6");
    EdgeList pairs;
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) pairs.emplace_back(i, j);
    std::set<EdgeList> seen;
    std::vector<LabeledMultigraph> out;
    EdgeList edges;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (seen.insert(relabel_min(d, edges)).second)
            out.push_back(LabeledMultigraph(d, edges));
        if (remaining == 0) return;
        for (std::size_t i = start; i < pairs.size(); ++i) {
            edges.push_back(pairs[i]);
            self(self, i, remaining - 1);
            edges.pop_back();
        }
    };
    rec(rec, 0, max_edges);
    return out;
}

std::vector<LabeledMultigraph> simple_graphs_up_to_relabeling(int d) {
    if (d < 1) throw std::invalid_argument("simple_graphs_up_to_relabeling: bad degree");
    if (d > 6) throw GuardLimitError("simple_graphs_up_to_relabeling: d > 6");
    EdgeList pairs;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) pairs.emplace_back(i, j);
    std::set<EdgeList> seen;
    std::vector<LabeledMultigraph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        EdgeList edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) edges.push_back(pairs[i]);
        if (seen.insert(relabel_min(d, edges)).second)
            out.push_back(LabeledMultigraph(d, std::move(edges)));
    }
    return out;
}

}  // namespace ncsym
