#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncsym/config.hpp"
#include "ncsym/rational.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

enum class Basis { M, P, E };

char basis_char(Basis b);
Basis basis_from_char(char c);

// Homogeneous element of the algebra of symmetric functions in noncommuting
// variables, written in one of the monomial/power-sum/elementary bases.
// Terms are indexed by set partitions of {1..degree}; zero coefficients are
// never stored.
class NCExpr {
  public:
    NCExpr(int degree, Basis basis);
    static NCExpr unit(Basis basis, const SetPartition& index);

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<SetPartition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const SetPartition& index) const;

    void add_term(const SetPartition& index, const Rat& c);
    NCExpr& operator+=(const NCExpr& other);
    NCExpr& operator-=(const NCExpr& other);
    NCExpr& operator*=(const Rat& c);
    friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
    friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
    friend NCExpr operator*(const Rat& c, NCExpr x) { return x *= c; }
    bool operator==(const NCExpr&) const = default;

  private:
    int degree_;
    Basis basis_;
    std::map<SetPartition, Rat> terms_;
};

// Commutative symmetric function, terms indexed by integer partitions.
class CExpr {
  public:
    CExpr(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<IntegerPartition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const IntegerPartition& index) const;
    void add_term(const IntegerPartition& index, const Rat& c);
    bool operator==(const CExpr&) const = default;

  private:
    int degree_;
    Basis basis_;
    std::map<IntegerPartition, Rat> terms_;
};

// Univariate polynomial with rational coefficients, ascending powers.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat eval(const Rat& x) const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const Rat& c);
    UniPoly operator*(const UniPoly& other) const;
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    bool operator==(const UniPoly&) const = default;

    static UniPoly one();
    static UniPoly var();                 // x
    static UniPoly falling(int k);        // x(x-1)...(x-k+1)

  private:
    void trim();
    std::vector<Rat> c_;
};

// Elementary-basis terms amalgamated by congruence class: two partitions are
// identified when they have the same shape and the block containing the
// marked element has the same size.
struct ClassKey {
    IntegerPartition shape;
    int marked_size = 0;
    auto operator<=>(const ClassKey&) const = default;
};

class EClassExpr {
  public:
    EClassExpr(int degree, int marked) : degree_(degree), marked_(marked) {}

    int degree() const { return degree_; }
    int marked() const { return marked_; }
    const std::map<ClassKey, Rat>& terms() const { return terms_; }
    Rat coeff(const ClassKey& key) const;
    void add_term(const ClassKey& key, const Rat& c);
    bool is_nonneg() const;
    bool operator==(const EClassExpr&) const = default;

  private:
    int degree_;
    int marked_;
    std::map<ClassKey, Rat> terms_;
};

// Change of basis; exact in all directions.  M<->P and E<->P are single
// lattice sums, E<->M goes through P.
NCExpr to_basis(const NCExpr& x, Basis target);

// Alternative single-sum monomial-to-elementary conversion (double Mobius
// sum over the interval above each index); kept as a cross-check.
NCExpr m_to_e_direct(const NCExpr& x);

// Alternative elementary-to-monomial conversion from the defining meet
// condition; scans the whole lattice, so it is test-scale only.
NCExpr e_to_m_by_meet(const NCExpr& x, const RunConfig& cfg = default_config());

// Append a new last element co-blocked with the current last one (degree+1).
NCExpr induce(const NCExpr& x);
// Same map computed by the elementary-basis closed form; input must be E.
NCExpr induce_changeup(const NCExpr& x);
// Insert a new element at position pos co-blocked with position anchor.
NCExpr induce_at(const NCExpr& x, int anchor, int pos);

// Relabel positions: delta acts on block elements in every term.
NCExpr act(const Perm& delta, const NCExpr& x);

// Product of functions in disjoint position sets; defined on P and E only.
NCExpr disjoint_product(const NCExpr& a, const NCExpr& b);

CExpr commutative_image(const NCExpr& x);

// Substitute x_1 = ... = x_n = 1, x_i = 0 for i > n, as a polynomial in n.
UniPoly specialize_ones(const NCExpr& x);

// Expansion over words in variables x_1..x_n, truncated to n variables.
using Word = std::vector<int>;
std::map<Word, Rat> expand_words(const NCExpr& x, int n_vars,
                                 const RunConfig& cfg = default_config());

EClassExpr amalgamate(const NCExpr& x, int marked);

}  // namespace ncsym
