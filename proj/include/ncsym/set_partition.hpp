#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncsym/config.hpp"

namespace ncsym {

// Weakly decreasing positive parts.
struct IntegerPartition {
    std::vector<int> parts;

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        for (int x : parts)
            if (x <= 0) throw std::invalid_argument("IntegerPartition: parts must be positive");
    }
    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    auto operator<=>(const IntegerPartition&) const = default;
};

// Ordered positive parts.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x <= 0) throw std::invalid_argument("Composition: parts must be positive");
    }
    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    auto operator<=>(const Composition&) const = default;
};

// Permutation of {1..d}, stored as the image list.
class Perm {
  public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int d);
    static Perm transposition(int d, int i, int j);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const;
    Perm inverse() const;
    Perm after(const Perm& inner) const;  // (*this) ∘ inner
    const std::vector<int>& images() const { return img_; }
    bool operator==(const Perm&) const = default;

  private:
    std::vector<int> img_;
};

// Partition of {1..d} in canonical form: blocks ordered by minimum element,
// elements ascending within a block.  Stored as a restricted growth string,
// so equality and ordering are plain vector comparisons.
class SetPartition {
  public:
    explicit SetPartition(const std::vector<std::vector<int>>& blocks);
    static SetPartition from_labels(std::vector<std::uint8_t> labels);
    static SetPartition singletons(int d);  // finest partition
    static SetPartition one_block(int d);   // coarsest partition

    int degree() const { return static_cast<int>(rgs_.size()); }
    int block_count() const;
    int block_of(int element) const;  // 0-based block id, blocks ordered by min
    int block_size_of(int element) const;
    std::vector<std::vector<int>> blocks() const;
    const std::vector<std::uint8_t>& labels() const { return rgs_; }

    auto operator<=>(const SetPartition&) const = default;

  private:
    SetPartition() = default;
    std::vector<std::uint8_t> rgs_;
};

std::string slash_string(const SetPartition& p);

// Refinement order and lattice operations.
bool leq(const SetPartition& sigma, const SetPartition& pi);
SetPartition meet(const SetPartition& a, const SetPartition& b);

// Mobius function of the interval [sigma, tau]; requires sigma <= tau.
long long mobius(const SetPartition& sigma, const SetPartition& tau);
long long mobius_from_bottom(const SetPartition& tau);  // mobius(singletons, tau)

IntegerPartition shape(const SetPartition& p);
long long aut_constant(const SetPartition& p);        // product of multiplicity factorials
long long factorial_constant(const SetPartition& p);  // product of block-size factorials

// Element insertion maps used by induction.
SetPartition insert_into_block_of_last(const SetPartition& p);  // d+1 joins block of d
SetPartition new_singleton(const SetPartition& p);              // d+1 becomes its own block
SetPartition add_elements(const SetPartition& p, int count);    // d+1..d+count join block of d
// Shift elements >= pos up by one and put a new element pos in the block of anchor.
SetPartition insert_copy(const SetPartition& p, int anchor, int pos);

SetPartition apply_perm(const Perm& delta, const SetPartition& p);

// Blocks of a followed by blocks of b with labels shifted past a's degree.
SetPartition union_shifted(const SetPartition& a, const SetPartition& b);

unsigned long long bell_number(int d);

// Enumeration in restricted-growth-string order.
namespace detail {
template <class F>
void for_each_rgs(int d, F&& visit) {
    std::vector<std::uint8_t> a(d, 0), b(d, 0);
    for (int i = 1; i < d; ++i) b[i] = 1;
    for (;;) {
        visit(a);
        int i = d - 1;
        while (i > 0 && a[i] == b[i]) --i;
        if (i == 0) return;
        ++a[i];
        std::uint8_t nb = std::max<std::uint8_t>(b[i], static_cast<std::uint8_t>(a[i] + 1));
        for (int j = i + 1; j < d; ++j) {
            a[j] = 0;
            b[j] = nb;
        }
    }
}
}  // namespace detail

template <class F>
void for_each_partition(int d, F&& visit, const RunConfig& cfg = default_config()) {
    if (d < 1) throw std::invalid_argument("for_each_partition: degree must be positive");
    if (d > cfg.degree_guard)
        throw GuardLimitError("degree guard exceeded: d = " + std::to_string(d) +
                              " > " + std::to_string(cfg.degree_guard));
    detail::for_each_rgs(d, [&](const std::vector<std::uint8_t>& a) {
        visit(SetPartition::from_labels(a));
    });
}

std::vector<SetPartition> enumerate_partitions(int d, const RunConfig& cfg = default_config());

// Visit every coarsening tau >= p together with mobius(p, tau).
template <class F>
void for_each_coarsening(const SetPartition& p, F&& visit) {
    const int k = p.block_count();
    const auto& rgs = p.labels();
    const int d = p.degree();
    detail::for_each_rgs(k, [&](const std::vector<std::uint8_t>& rho) {
        std::vector<std::uint8_t> merged(d);
        for (int i = 0; i < d; ++i) merged[i] = rho[rgs[i]];
        int nb = 0;
        for (std::uint8_t x : rho) nb = std::max(nb, x + 1);
        std::vector<int> cnt(nb, 0);
        for (std::uint8_t x : rho) ++cnt[x];
        long long mu = 1;
        for (int c : cnt) {
            for (int j = 2; j < c; ++j) mu *= j;
            if (c % 2 == 0) mu = -mu;
        }
        visit(SetPartition::from_labels(merged), mu);
    });
}

// Visit every refinement sigma <= p together with mobius(sigma, p).
template <class F>
void for_each_refinement(const SetPartition& p, F&& visit) {
    const auto blocks = p.blocks();
    const int d = p.degree();
    const int nb = static_cast<int>(blocks.size());
    std::vector<std::uint8_t> labels(d, 0);
    long long mu = 1;
    int next_id = 0;
    auto rec = [&](auto&& self, int bi) -> void {
        if (bi == nb) {
            visit(SetPartition::from_labels(labels), mu);
            return;
        }
        const auto& blk = blocks[bi];
        const int m = static_cast<int>(blk.size());
        detail::for_each_rgs(m, [&](const std::vector<std::uint8_t>& sub) {
            int sb = 0;
            for (std::uint8_t x : sub) sb = std::max(sb, x + 1);
            for (int i = 0; i < m; ++i)
                labels[blk[i] - 1] = static_cast<std::uint8_t>(next_id + sub[i]);
            long long f = 1;
            for (int j = 2; j < sb; ++j) f *= j;
            if (sb % 2 == 0) f = -f;
            long long saved_mu = mu;
            int saved_id = next_id;
            mu *= f;
            next_id += sb;
            self(self, bi + 1);
            mu = saved_mu;
            next_id = saved_id;
        });
    };
    rec(rec, 0);
}

// Refinements of p + (d+1) whose block containing the marked element (d+1 by
// default, or d) has size alpha_1 and whose remaining block sizes match
// alpha_2.. as a multiset.
std::vector<SetPartition> enumerate_Palpha(const SetPartition& p, const Composition& alpha,
                                           int marked);

}  // namespace ncsym
