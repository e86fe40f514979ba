#pragma once

// Independent brute-force reference implementations used only by the tests.
// Each one recomputes a quantity from its defining property rather than via
// the library's production code path.

#include <map>
#include <vector>

#include "ncsym/set_partition.hpp"

namespace oracle {

using ncsym::SetPartition;

// Bell numbers by the binomial recurrence B(n+1) = sum C(n,k) B(k).
inline unsigned long long bell_rec(int n) {
    std::vector<std::vector<unsigned long long>> choose(n + 1);
    for (int i = 0; i <= n; ++i) {
        choose[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) choose[i][j] = choose[i - 1][j - 1] + choose[i - 1][j];
    }
    std::vector<unsigned long long> b{1};
    for (int m = 0; m < n; ++m) {
        unsigned long long next = 0;
        for (int k = 0; k <= m; ++k) next += choose[m][k] * b[k];
        b.push_back(next);
    }
    return b[n];
}

// Mobius function straight from the defining recurrence:
// mu(tau,tau) = 1 and mu(sigma,tau) = -sum_{sigma < rho <= tau} mu(rho,tau).
class MobiusByRecurrence {
  public:
    explicit MobiusByRecurrence(int d) : all_(ncsym::enumerate_partitions(d)) {}

    long long operator()(const SetPartition& sigma, const SetPartition& tau) {
        if (sigma == tau) return 1;
        auto key = std::make_pair(sigma, tau);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        long long s = 0;
        for (const auto& rho : all_)
            if (!(rho == sigma) && ncsym::leq(sigma, rho) && ncsym::leq(rho, tau))
                s -= (*this)(rho, tau);
        memo_.emplace(std::move(key), s);
        return s;
    }

  private:
    std::vector<SetPartition> all_;
    std::map<std::pair<SetPartition, SetPartition>, long long> memo_;
};

}  // namespace oracle
