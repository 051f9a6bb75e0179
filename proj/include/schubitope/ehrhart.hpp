#ifndef SCHUBITOPE_EHRHART_HPP
#define SCHUBITOPE_EHRHART_HPP

#include <functional>
#include <string>
#include <vector>

#include "schubitope/diagram.hpp"
#include "schubitope/types.hpp"

namespace schub {

// Exact rational coefficients from the constant term upward.
class EhrhartPolynomial {
  public:
    explicit EhrhartPolynomial(std::vector<Rat> coeffs);
    static EhrhartPolynomial one() { return EhrhartPolynomial({Rat(1)}); }

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat evaluate(long long t) const;
    EhrhartPolynomial operator*(const EhrhartPolynomial& o) const;
    bool operator==(const EhrhartPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // "p/q" strings from the constant term upward.
    std::vector<std::string> coefficient_strings() const;

  private:
    std::vector<Rat> coeffs_;  // trailing zeros trimmed
};

// Lagrange interpolation through t = 0..affine_dim, validated against the
// counter at t = affine_dim + 1 and + 2; a mismatch faults.
EhrhartPolynomial ehrhart_interpolate(const std::function<long long(int)>& counter,
                                      int affine_dim);

struct FactorizationVerdict {
    bool equal = false;
    EhrhartPolynomial schubitope_side;
    EhrhartPolynomial product_side;
    std::vector<EhrhartPolynomial> column_factors;
};

// Compares i(S_D, t) against the product of the per-column Schubert matroid
// polytope Ehrhart polynomials.
FactorizationVerdict ehrhart_factorization_check(const Diagram& d);

// Ehrhart polynomial of the base polytope P(SM_n(D_j)), computed from the
// single-column schubitope H-description.
EhrhartPolynomial column_base_polytope_ehrhart(const Diagram& d, int j);

}  // namespace schub

#endif
