#include "schubitope/ehrhart.hpp"

#include "schubitope/lattice.hpp"

namespace schub {

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Rat(0));
}

Rat EhrhartPolynomial::evaluate(long long t) const {
    Rat value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        value = value * Rat(static_cast<long>(t)) + *it;
    return value;
}

EhrhartPolynomial EhrhartPolynomial::operator*(const EhrhartPolynomial& o) const {
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return EhrhartPolynomial(std::move(out));
}

std::vector<std::string> EhrhartPolynomial::coefficient_strings() const {
    std::vector<std::string> out;
    for (const Rat& c : coeffs_) {
        Rat r = c;
        r.canonicalize();
        std::string s = r.get_num().get_str();
        if (r.get_den() != 1) s += "/" + r.get_den().get_str();
        out.push_back(std::move(s));
    }
    return out;
}

EhrhartPolynomial ehrhart_interpolate(const std::function<long long(int)>& counter,
                                      int affine_dim) {
    const int d = affine_dim;
    std::vector<Rat> values(d + 1);
    for (int t = 0; t <= d; ++t) values[t] = Rat(static_cast<long>(counter(t)));

    // Lagrange interpolation over the nodes 0..d in the monomial basis.
    std::vector<Rat> coeffs(d + 1, Rat(0));
    for (int k = 0; k <= d; ++k) {
        // Basis polynomial prod_{m != k} (t - m) / (k - m).
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (int m = 0; m <= d; ++m) {
            if (m == k) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t c = 0; c < basis.size(); ++c) {
                next[c] += basis[c] * Rat(-m);
                next[c + 1] += basis[c];
            }
            basis = std::move(next);
            denom *= Rat(k - m);
        }
        for (std::size_t c = 0; c < basis.size(); ++c)
            coeffs[c] += values[k] * basis[c] / denom;
    }

    EhrhartPolynomial poly{std::move(coeffs)};
    for (int t = d + 1; t <= d + 2; ++t)
        if (poly.evaluate(t) != Rat(static_cast<long>(counter(t))))
            throw invariant_fault("Ehrhart validation mismatch at held-out dilation t=" +
                                  std::to_string(t));
    return poly;
}

namespace {

EhrhartPolynomial ehrhart_of_theta(const ThetaTable& theta) {
    const auto base_points = dilated_schubitope_points(theta, 1);
    const int d = affine_dimension(base_points.points());
    return ehrhart_interpolate(
        [&theta](int t) {
            return static_cast<long long>(dilated_schubitope_points(theta, t).size());
        },
        d);
}

}  // namespace

EhrhartPolynomial column_base_polytope_ehrhart(const Diagram& d, int j) {
    std::vector<Subset> single(d.n(), 0);
    single[j - 1] = d.column(j);
    return ehrhart_of_theta(ThetaTable(Diagram(d.n(), std::move(single))));
}

FactorizationVerdict ehrhart_factorization_check(const Diagram& d) {
    const ThetaTable theta(d);
    EhrhartPolynomial lhs = ehrhart_of_theta(theta);

    std::vector<EhrhartPolynomial> factors;
    EhrhartPolynomial product = EhrhartPolynomial::one();
    for (int j = 1; j <= d.n(); ++j) {
        factors.push_back(column_base_polytope_ehrhart(d, j));
        product = product * factors.back();
    }
    const bool equal = lhs == product;
    return {equal, std::move(lhs), std::move(product), std::move(factors)};
}

}  // namespace schub
