#include "schubitope/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace schub {

SparsePolynomial::SparsePolynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1 || n_vars > kMaxGroundSize) throw input_error("bad variable count");
}

SparsePolynomial SparsePolynomial::constant(int n_vars, Int value) {
    SparsePolynomial p(n_vars);
    p.add_term(Exponent(n_vars, 0), value);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(int n_vars, Exponent e, Int coeff) {
    SparsePolynomial p(n_vars);
    p.add_term(e, coeff);
    return p;
}

Int SparsePolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const Int& c) {
    if (static_cast<int>(e.size()) != n_vars_)
        throw input_error("exponent length does not match ambient variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    if (n_vars_ != o.n_vars_) throw input_error("mixing polynomial ambients");
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    if (n_vars_ != o.n_vars_) throw input_error("mixing polynomial ambients");
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (n_vars_ != o.n_vars_) throw input_error("mixing polynomial ambients");
    SparsePolynomial out(n_vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(n_vars_);
            for (int k = 0; k < n_vars_; ++k) e[k] = e1[k] + e2[k];
            out.add_term(e, c1 * c2);
        }
    return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
    return n_vars_ == o.n_vars_ && terms_ == o.terms_;
}

SparsePolynomial SparsePolynomial::swap_vars(int i) const {
    SparsePolynomial out(n_vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        std::swap(f[i - 1], f[i]);
        out.add_term(f, c);
    }
    return out;
}

std::vector<Exponent> SparsePolynomial::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

std::vector<int> SparsePolynomial::max_degrees() const {
    std::vector<int> d(n_vars_, 0);
    for (const auto& [e, c] : terms_)
        for (int k = 0; k < n_vars_; ++k) d[k] = std::max(d[k], e[k]);
    return d;
}

int SparsePolynomial::total_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

int SparsePolynomial::min_total_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int deg = std::accumulate(e.begin(), e.end(), 0);
        best = first ? deg : std::min(best, deg);
        first = false;
    }
    return best;
}

SparsePolynomial SparsePolynomial::homogeneous_component(int degree) const {
    SparsePolynomial out(n_vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree) out.add_term(e, c);
    return out;
}

Int SparsePolynomial::evaluate_at_ones() const {
    Int total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

namespace {

// Divide g by (x_i - x_j) by synthetic division, treating g as univariate in
// x_i over Z[x_j, other variables]. Faults if the remainder is nonzero.
SparsePolynomial divide_by_difference(const SparsePolynomial& g, int i, int j) {
    const int n = g.n_vars();
    // Bucket terms by the exponents away from x_i; within a bucket keep a
    // dense coefficient list indexed by the x_i degree. The x_j exponent
    // stays inside the bucket key's residual monomial and is handled by the
    // shift g_{d-1} += x_j * g_d.
    std::map<Exponent, std::map<int, Int>> buckets;
    for (const auto& [e, c] : g.terms()) {
        Exponent key = e;
        const int deg_i = key[i - 1];
        key[i - 1] = 0;
        buckets[key][deg_i] += c;
    }

    SparsePolynomial quotient(n);
    // Buckets sharing everything except x_j interact through the shift, so
    // process bucket keys with the x_j exponent stripped.
    std::map<Exponent, std::map<std::pair<int, int>, Int>> grouped;  // (deg_i, deg_j) -> c
    for (auto& [key, by_deg] : buckets) {
        Exponent base = key;
        const int deg_j = base[j - 1];
        base[j - 1] = 0;
        for (auto& [deg_i, c] : by_deg)
            if (c != 0) grouped[base][{deg_i, deg_j}] += c;
    }

    for (auto& [base, coeffs] : grouped) {
        // coeffs is a bivariate polynomial h(x_i, x_j); divide by x_i - x_j.
        int max_i = 0;
        for (const auto& [dij, c] : coeffs) max_i = std::max(max_i, dij.first);
        // h_a(x_j) as maps deg_j -> coeff.
        std::vector<std::map<int, Int>> h(max_i + 1);
        for (const auto& [dij, c] : coeffs) h[dij.first][dij.second] += c;

        std::vector<std::map<int, Int>> q(std::max(max_i, 1));
        std::map<int, Int> carry;  // q_a, shifted by x_j as we descend
        for (int a = max_i; a >= 1; --a) {
            std::map<int, Int> qa = h[a];
            for (const auto& [dj, c] : carry) qa[dj] += c;
            // drop zeros
            for (auto it = qa.begin(); it != qa.end();)
                it = it->second == 0 ? qa.erase(it) : std::next(it);
            q[a - 1] = qa;
            carry.clear();
            for (const auto& [dj, c] : qa) carry[dj + 1] = c;  // x_j * q_{a-1}
        }
        // Remainder = h_0 + x_j * q_0.
        std::map<int, Int> rem = h[0];
        for (const auto& [dj, c] : carry) rem[dj] += c;
        for (const auto& [dj, c] : rem)
            if (c != 0)
                throw invariant_fault("divided difference: nonzero division remainder");

        for (int a = 0; a < static_cast<int>(q.size()); ++a)
            for (const auto& [dj, c] : q[a]) {
                Exponent e = base;
                e[i - 1] = a;
                e[j - 1] += dj;
                quotient.add_term(e, c);
            }
    }
    return quotient;
}

}  // namespace

SparsePolynomial divided_difference(const SparsePolynomial& f, int i) {
    if (i < 1 || i >= f.n_vars()) throw input_error("divided difference index out of range");
    const SparsePolynomial numerator = f - f.swap_vars(i);
    if (numerator.is_zero()) return SparsePolynomial::zero(f.n_vars());
    return divide_by_difference(numerator, i, i + 1);
}

namespace {

SparsePolynomial staircase(int n) {
    Exponent e(n);
    for (int k = 0; k < n; ++k) e[k] = n - 1 - k;
    return SparsePolynomial::monomial(n, e);
}

template <typename Step>
SparsePolynomial descent_recursion(const Permutation& w, Step step) {
    // Ascent choice is always the smallest index, so the chain from w up to
    // w0 is deterministic and memoizable by the caller if needed.
    Permutation cur = w;
    std::vector<int> picked;
    while (true) {
        const int i = cur.first_ascent();
        if (i == 0) break;
        picked.push_back(i);
        cur = cur.times_s(i);
    }
    SparsePolynomial poly = staircase(w.size());
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) poly = step(poly, *it);
    return poly;
}

}  // namespace

SparsePolynomial schubert(const Permutation& w) {
    return descent_recursion(
        w, [](const SparsePolynomial& p, int i) { return divided_difference(p, i); });
}

SparsePolynomial grothendieck(const Permutation& w) {
    const int n = w.size();
    return descent_recursion(w, [n](const SparsePolynomial& p, int i) {
        Exponent e(n, 0);
        e[i] = 1;  // x_{i+1}
        const SparsePolynomial shifted = p - SparsePolynomial::monomial(n, e) * p;
        return divided_difference(shifted, i);
    });
}

SparsePolynomial key_polynomial(const Composition& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0) throw input_error("empty composition");
    for (int a : alpha)
        if (a < 0) throw input_error("composition parts must be nonnegative");

    // Unwind to the weakly decreasing base case along smallest inversions.
    Composition cur = alpha;
    std::vector<int> picked;
    while (true) {
        int i = 0;
        for (int k = 1; k < n; ++k)
            if (cur[k - 1] < cur[k]) {
                i = k;
                break;
            }
        if (i == 0) break;
        picked.push_back(i);
        std::swap(cur[i - 1], cur[i]);
    }
    SparsePolynomial poly = SparsePolynomial::monomial(n, cur);
    for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
        const int i = *it;
        Exponent e(n, 0);
        e[i - 1] = 1;  // x_i
        poly = divided_difference(SparsePolynomial::monomial(n, e) * poly, i);
    }
    return poly;
}

}  // namespace schub
