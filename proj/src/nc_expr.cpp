#include "ncsym/nc_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsym {

char basis_char(Basis b) {
    switch (b) {
        case Basis::M: return 'm';
        case Basis::P: return 'p';
        case Basis::E: return 'e';
    }
    throw std::logic_error("basis_char: bad basis");
}

Basis basis_from_char(char c) {
    switch (c) {
        case 'm': case 'M': return Basis::M;
        case 'p': case 'P': return Basis::P;
        case 'e': case 'E': return Basis::E;
    }
    throw std::invalid_argument(std::string("basis_from_char: bad basis '") + c + "'");
}

NCExpr::NCExpr(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 1) throw std::invalid_argument("NCExpr: degree must be positive");
}

NCExpr NCExpr::unit(Basis basis, const SetPartition& index) {
    NCExpr x(index.degree(), basis);
    x.terms_.emplace(index, 1);
    return x;
}

Rat NCExpr::coeff(const SetPartition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NCExpr::add_term(const SetPartition& index, const Rat& c) {
    if (index.degree() != degree_) throw std::invalid_argument("NCExpr: index degree mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(index, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCExpr& NCExpr::operator+=(const NCExpr& other) {
    if (other.degree_ != degree_ || other.basis_ != basis_)
        throw std::invalid_argument("NCExpr: cannot add across degrees or bases; convert first");
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& other) {
    if (other.degree_ != degree_ || other.basis_ != basis_)
        throw std::invalid_argument("NCExpr: cannot subtract across degrees or bases; convert first");
    for (const auto& [idx, c] : other.terms_) add_term(idx, Rat(-c));
    return *this;
}

NCExpr& NCExpr::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, v] : terms_) v *= c;
    return *this;
}

Rat CExpr::coeff(const IntegerPartition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rat(0) : it->second;
}

void CExpr::add_term(const IntegerPartition& index, const Rat& c) {
    if (index.sum() != degree_) throw std::invalid_argument("CExpr: index degree mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(index, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

Rat UniPoly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rat(0));
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rat(0));
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (c_.empty() || other.c_.empty()) return UniPoly();
    std::vector<Rat> out(c_.size() + other.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::one() { return UniPoly({Rat(1)}); }

UniPoly UniPoly::var() { return UniPoly({Rat(0), Rat(1)}); }

UniPoly UniPoly::falling(int k) {
    UniPoly p = one();
    for (int j = 0; j < k; ++j) p = p * UniPoly({Rat(-j), Rat(1)});
    return p;
}

Rat EClassExpr::coeff(const ClassKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

void EClassExpr::add_term(const ClassKey& key, const Rat& c) {
    if (key.shape.sum() != degree_)
        throw std::invalid_argument("EClassExpr: shape degree mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool EClassExpr::is_nonneg() const {
    for (const auto& [k, c] : terms_)
        if (c < 0) return false;
    return true;
}

namespace {

NCExpr m_to_p(const NCExpr& x) {
    NCExpr out(x.degree(), Basis::P);
    for (const auto& [pi, c] : x.terms())
        for_each_coarsening(pi, [&, cc = c](const SetPartition& sigma, long long mu) {
            out.add_term(sigma, cc * to_rat(mu));
        });
    return out;
}

NCExpr p_to_m(const NCExpr& x) {
    NCExpr out(x.degree(), Basis::M);
    for (const auto& [pi, c] : x.terms())
        for_each_coarsening(pi, [&, cc = c](const SetPartition& sigma, long long) {
            out.add_term(sigma, cc);
        });
    return out;
}

NCExpr e_to_p(const NCExpr& x) {
    NCExpr out(x.degree(), Basis::P);
    for (const auto& [pi, c] : x.terms())
        for_each_refinement(pi, [&, cc = c](const SetPartition& sigma, long long) {
            out.add_term(sigma, cc * to_rat(mobius_from_bottom(sigma)));
        });
    return out;
}

NCExpr p_to_e(const NCExpr& x) {
    NCExpr out(x.degree(), Basis::E);
    for (const auto& [pi, c] : x.terms()) {
        Rat scale = Rat(c) / to_rat(mobius_from_bottom(pi));
        for_each_refinement(pi, [&](const SetPartition& sigma, long long mu) {
            out.add_term(sigma, scale * to_rat(mu));
        });
    }
    return out;
}

}  // namespace

NCExpr to_basis(const NCExpr& x, Basis target) {
    if (x.basis() == target) return x;
    switch (x.basis()) {
        case Basis::M:
            return target == Basis::P ? m_to_p(x) : p_to_e(m_to_p(x));
        case Basis::P:
            return target == Basis::M ? p_to_m(x) : p_to_e(x);
        case Basis::E:
            return target == Basis::P ? e_to_p(x) : p_to_m(e_to_p(x));
    }
    throw std::logic_error("to_basis: bad basis");
}

NCExpr m_to_e_direct(const NCExpr& x) {
    if (x.basis() != Basis::M) throw std::invalid_argument("m_to_e_direct: input must be M basis");
    NCExpr out(x.degree(), Basis::E);
    for (const auto& [pi, c] : x.terms())
        for_each_coarsening(pi, [&, cc = c](const SetPartition& tau, long long mu_pi_tau) {
            Rat w = Rat(cc) * to_rat(mu_pi_tau) / to_rat(mobius_from_bottom(tau));
            for_each_refinement(tau, [&](const SetPartition& sigma, long long mu_sigma_tau) {
                out.add_term(sigma, w * to_rat(mu_sigma_tau));
            });
        });
    return out;
}

NCExpr e_to_m_by_meet(const NCExpr& x, const RunConfig& cfg) {
    if (x.basis() != Basis::E) throw std::invalid_argument("e_to_m_by_meet: input must be E basis");
    NCExpr out(x.degree(), Basis::M);
    const auto bottom = SetPartition::singletons(x.degree());
    for_each_partition(
        x.degree(),
        [&](const SetPartition& sigma) {
            for (const auto& [pi, c] : x.terms())
                if (meet(sigma, pi) == bottom) out.add_term(sigma, c);
        },
        cfg);
    return out;
}

NCExpr induce(const NCExpr& x) { return induce_at(x, x.degree(), x.degree() + 1); }

NCExpr induce_at(const NCExpr& x, int anchor, int pos) {
    if (anchor < 1 || pos <= anchor || pos > x.degree() + 1)
        throw std::invalid_argument("induce_at: need 1 <= anchor < pos <= degree+1");
    if (x.basis() == Basis::E) {
        NCExpr p = to_basis(x, Basis::P);
        return to_basis(induce_at(p, anchor, pos), Basis::E);
    }
    NCExpr out(x.degree() + 1, x.basis());
    for (const auto& [pi, c] : x.terms()) out.add_term(insert_copy(pi, anchor, pos), c);
    return out;
}

NCExpr induce_changeup(const NCExpr& x) {
    if (x.basis() != Basis::E)
        throw std::invalid_argument("induce_changeup: input must be E basis");
    NCExpr out(x.degree() + 1, Basis::E);
    for (const auto& [pi, c] : x.terms())
        for_each_refinement(pi, [&, cc = c](const SetPartition& sigma, long long) {
            const SetPartition up = insert_into_block_of_last(sigma);
            Rat w = Rat(cc) * to_rat(mobius_from_bottom(sigma)) / to_rat(mobius_from_bottom(up));
            for_each_refinement(up, [&](const SetPartition& tau, long long mu) {
                out.add_term(tau, w * to_rat(mu));
            });
        });
    return out;
}

NCExpr act(const Perm& delta, const NCExpr& x) {
    if (delta.degree() != x.degree()) throw std::invalid_argument("act: degree mismatch");
    NCExpr out(x.degree(), x.basis());
    for (const auto& [pi, c] : x.terms()) out.add_term(apply_perm(delta, pi), c);
    return out;
}

NCExpr disjoint_product(const NCExpr& a, const NCExpr& b) {
    if (a.basis() != b.basis())
        throw std::invalid_argument("disjoint_product: operands must share a basis");
    if (a.basis() == Basis::M)
        throw std::invalid_argument(
            "disjoint_product: not defined on the M basis; convert to P or E first");
    NCExpr out(a.degree() + b.degree(), a.basis());
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) out.add_term(union_shifted(pa, pb), ca * cb);
    return out;
}

CExpr commutative_image(const NCExpr& x) {
    CExpr out(x.degree(), x.basis());
    for (const auto& [pi, c] : x.terms()) {
        switch (x.basis()) {
            case Basis::M: out.add_term(shape(pi), c * to_rat(aut_constant(pi))); break;
            case Basis::P: out.add_term(shape(pi), c); break;
            case Basis::E: out.add_term(shape(pi), c * to_rat(factorial_constant(pi))); break;
        }
    }
    return out;
}

UniPoly specialize_ones(const NCExpr& x) {
    UniPoly out;
    std::map<IntegerPartition, UniPoly> cache;
    for (const auto& [pi, c] : x.terms()) {
        UniPoly term;
        switch (x.basis()) {
            case Basis::M: term = UniPoly::falling(pi.block_count()); break;
            case Basis::P: {
                UniPoly p = UniPoly::one();
                for (int i = 0; i < pi.block_count(); ++i) p = p * UniPoly::var();
                term = p;
                break;
            }
            case Basis::E: {
                const auto sh = shape(pi);
                auto it = cache.find(sh);
                if (it == cache.end()) {
                    UniPoly p = UniPoly::one();
                    for (int part : sh.parts) p = p * UniPoly::falling(part);
                    it = cache.emplace(sh, std::move(p)).first;
                }
                term = it->second;
                break;
            }
        }
        term *= c;
        out += term;
    }
    return out;
}

namespace {

// Fill positions of pi's blocks with values in 1..n according to the basis
// rule, calling sink(word) for each admissible assignment.
template <class Sink>
void fill_words(Basis basis, const std::vector<std::vector<int>>& blocks, int n, Sink&& sink) {
    const int nb = static_cast<int>(blocks.size());
    int d = 0;
    for (const auto& b : blocks) d += static_cast<int>(b.size());
    Word w(d, 0);
    std::vector<char> used(n + 1, 0);  // M basis: block values pairwise distinct

    auto rec = [&](auto&& self, int bi) -> void {
        if (bi == nb) {
            sink(w);
            return;
        }
        const auto& blk = blocks[bi];
        switch (basis) {
            case Basis::M:
                for (int v = 1; v <= n; ++v) {
                    if (used[v]) continue;
                    used[v] = 1;
                    for (int pos : blk) w[pos - 1] = v;
                    self(self, bi + 1);
                    used[v] = 0;
                }
                break;
            case Basis::P:
                for (int v = 1; v <= n; ++v) {
                    for (int pos : blk) w[pos - 1] = v;
                    self(self, bi + 1);
                }
                break;
            case Basis::E: {
                // injective assignment of values to this block's positions
                std::vector<char> inblk(n + 1, 0);
                auto inner = [&](auto&& iself, std::size_t j) -> void {
                    if (j == blk.size()) {
                        self(self, bi + 1);
                        return;
                    }
                    for (int v = 1; v <= n; ++v) {
                        if (inblk[v]) continue;
                        inblk[v] = 1;
                        w[blk[j] - 1] = v;
                        iself(iself, j + 1);
                        inblk[v] = 0;
                    }
                };
                inner(inner, 0);
                break;
            }
        }
    };
    rec(rec, 0);
}

}  // namespace

std::map<Word, Rat> expand_words(const NCExpr& x, int n_vars, const RunConfig& cfg) {
    if (n_vars < 0) throw std::invalid_argument("expand_words: negative variable count");
    long long size = 1;
    for (int i = 0; i < x.degree(); ++i) {
        size *= std::max(n_vars, 1);
        if (size > cfg.word_guard)
            throw GuardLimitError("word guard exceeded: " + std::to_string(n_vars) + "^" +
                                  std::to_string(x.degree()) + " > " +
                                  std::to_string(cfg.word_guard));
    }
    std::map<Word, Rat> out;
    for (const auto& [pi, c] : x.terms())
        fill_words(x.basis(), pi.blocks(), n_vars, [&, cc = c](const Word& w) {
            auto [it, fresh] = out.emplace(w, cc);
            if (!fresh) {
                it->second += cc;
                if (it->second == 0) out.erase(it);
            }
        });
    return out;
}

EClassExpr amalgamate(const NCExpr& x, int marked) {
    if (x.basis() != Basis::E)
        throw std::invalid_argument("amalgamate: defined on the E basis; convert first");
    if (marked < 1 || marked > x.degree())
        throw std::invalid_argument("amalgamate: marked element out of range");
    EClassExpr out(x.degree(), marked);
    for (const auto& [pi, c] : x.terms())
        out.add_term({shape(pi), pi.block_size_of(marked)}, c);
    return out;
}

}  // namespace ncsym
