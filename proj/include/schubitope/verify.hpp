#ifndef SCHUBITOPE_VERIFY_HPP
#define SCHUBITOPE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "schubitope/diagram.hpp"
#include "schubitope/permutation.hpp"

namespace schub {

struct SuiteOptions {
    std::uint64_t seed = 0;
    int jobs = 0;  // <= 0: hardware concurrency
    bool fail_fast = false;
    int random_diagrams = 200;
};

struct Report {
    std::string suite;
    std::string corpus;
    std::uint64_t seed = 0;
    int n_instances = 0;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    nlohmann::ordered_json findings = nlohmann::ordered_json::array();
    long long elapsed_ms = 0;

    bool pass() const { return failures.empty(); }
    int n_failures() const { return static_cast<int>(failures.size()); }
    nlohmann::ordered_json to_json(bool include_timing = true) const;
    // Byte-comparable form: timing excluded.
    std::string canonical() const;
};

// Theorem 1.1 three-way equivalence plus the H-description vs Minkowski
// oracle comparison, over the 512 small diagrams and a seeded random corpus.
Report verify_schubitope_criterion(const SuiteOptions& options);

// Corollary 1.2 four-way equivalence, Proposition 5.1 equivalences, and SNP
// of Schubert polynomials (n <= 5), over all of S_n.
Report verify_schubert_suite(int n, const SuiteOptions& options);

// Lattice-freeness of Newton(G_w) vs pattern avoidance, the spanning-set
// Minkowski identity and Ehrhart factorization, the support conjectures, and
// the degree/specialization laws, over all of S_n.
Report verify_grothendieck_suite(int n, const SuiteOptions& options);

// Corollary 1.3 and the key closure propositions over all compositions with
// bounded parts and length.
Report verify_key_suite(int max_part, int max_len, const SuiteOptions& options);

// Seeded random diagrams in [n]^n: each cell present independently with
// probability 1/2.
std::vector<Diagram> random_diagrams(int n, int count, std::uint64_t seed);

// Independent oracle for pattern containment: plain enumeration of all
// k-subsets of positions.
bool contains_pattern_bruteforce(const Permutation& w, const Permutation& tau);

}  // namespace schub

#endif
