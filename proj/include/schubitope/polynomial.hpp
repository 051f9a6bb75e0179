#ifndef SCHUBITOPE_POLYNOMIAL_HPP
#define SCHUBITOPE_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "schubitope/diagram.hpp"
#include "schubitope/permutation.hpp"
#include "schubitope/types.hpp"

namespace schub {

using Exponent = std::vector<int>;

// Sparse polynomial over Z in a fixed ambient number of variables. Zero
// coefficients are never stored; mixing ambients is an error.
class SparsePolynomial {
  public:
    explicit SparsePolynomial(int n_vars);
    static SparsePolynomial zero(int n_vars) { return SparsePolynomial(n_vars); }
    static SparsePolynomial constant(int n_vars, Int value);
    static SparsePolynomial monomial(int n_vars, Exponent e, Int coeff = 1);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Int>& terms() const { return terms_; }
    Int coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Int& c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    bool operator==(const SparsePolynomial& o) const;

    // Exchange x_i and x_{i+1} (1-based i).
    SparsePolynomial swap_vars(int i) const;

    std::vector<Exponent> support() const;
    // Max exponent of each variable over the support; zeros for the zero poly.
    std::vector<int> max_degrees() const;
    int total_degree() const;
    int min_total_degree() const;
    SparsePolynomial homogeneous_component(int degree) const;
    Int evaluate_at_ones() const;  // = sum of coefficients

  private:
    int n_vars_;
    std::map<Exponent, Int> terms_;
};

// (f - s_i f) / (x_i - x_{i+1}); exact by construction, faults on a nonzero
// synthetic-division remainder.
SparsePolynomial divided_difference(const SparsePolynomial& f, int i);

SparsePolynomial schubert(const Permutation& w);
SparsePolynomial grothendieck(const Permutation& w);
SparsePolynomial key_polynomial(const Composition& alpha);

}  // namespace schub

#endif
