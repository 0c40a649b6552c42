#pragma once

#include "esub/liealg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace esub {

// Truncated exponential 1 + X + X^2/2! + ... + X^{p-1}/(p-1)!.
// Requires X nilpotent and p >= n so the series terminates before division
// by p.  Throws std::domain_error on non-nilpotent input.
MatrixFq exp_nilpotent(const MatrixFq& X);

// Truncated Mercator series sum_{i=1}^{p-1} (-1)^{i+1} (u-I)^i / i; the exact
// inverse of exp_nilpotent on unipotent matrices in the p >= n regime (the
// formal identity truncates cleanly because (u-I)^p = 0).  Throws
// std::domain_error on non-unipotent input.
MatrixFq log_unipotent(const MatrixFq& u);

// Generalized power g^lambda = exp(lambda * log(g)); for lambda in the prime
// subfield this is the lambda-th group power of g.
MatrixFq unipotent_power(const MatrixFq& g, Fe lambda);

struct SuiteFailure {
    std::string check;
    std::string witness;
};

struct SuiteReport {
    long long trials = 0;
    long long checks_run = 0;
    long long failures = 0;
    std::vector<SuiteFailure> witnesses; // first few failures only
    bool all_passed() const { return failures == 0; }
};

// Randomized identity suite: commutation equivalence, sum-to-product, exp/log
// round trips, the four generalized-power laws including conjugation
// equivariance, and Frobenius equivariance.  Failures are data, not errors.
SuiteReport springer_identity_suite(const AmbientAlgebra& algebra, long long trials,
                                    std::uint64_t rng_seed);

// Random sampling helpers shared with tests and the enumeration suites.
class Rng;
MatrixFq random_matrix(const FieldCtx& F, int n, Rng& rng);
MatrixFq random_invertible(const FieldCtx& F, int n, Rng& rng);
MatrixFq random_strictly_upper(const FieldCtx& F, int n, Rng& rng);
MatrixFq random_nilpotent(const FieldCtx& F, int n, Rng& rng);

// Thin deterministic RNG wrapper so suites are reproducible by seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    Fe elem(const FieldCtx& F) { return Fe(below(F.q())); }
    Fe nonzero_elem(const FieldCtx& F) { return Fe(1 + below(F.q() - 1)); }

private:
    std::uint64_t state_;
};

} // namespace esub
