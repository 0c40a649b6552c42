#pragma once

#include "esub/evariety.hpp"
#include "esub/rational_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace esub {

struct GroupGenerators {
    int n = 0;
    const FieldCtx* field = nullptr;
    std::vector<MatrixFq> generators;
    std::vector<MatrixFq> inverses; // precomputed, index-aligned
    BigInt group_order = 0;         // order of the generated group
};

// Elementary transvections {I + E_ij : i != j} plus diag(w,1,...,1) with w the
// least primitive element; generates GL_n(F_q) by row reduction.
GroupGenerators gl_generators(int n, const FieldCtx& field);

// Generators of U_n(F_q): the transvections I + E_ij for i < j.
GroupGenerators u_generators(int n, const FieldCtx& field);

BigInt gl_order(int n, const FieldCtx& field);

// Canonical form of {g X g^-1 : X in eps}; elementary of the same rank.
Subspace act(const MatrixFq& g, const MatrixFq& g_inv, const AmbientAlgebra& algebra,
             const Subspace& eps);
Subspace act(const MatrixFq& g, const AmbientAlgebra& algebra, const Subspace& eps);

struct OrbitRecord {
    Subspace representative;        // lexicographically least canonical key
    long long size = 0;
    BigInt stabilizer_order = 0;
    std::vector<Partition> jordan_types; // support of the Jordan profile
};

// Partition into generator-closure classes by BFS; records sorted by
// (size, representative key).
std::vector<OrbitRecord> orbit_partition(const PointSet& points, const GroupGenerators& gens,
                                         const EnumBudget& budget = {});

BigInt stabilizer_order(long long orbit_size, const BigInt& group_order);

// One orbit family matched across primes.
struct OrbitFamily {
    int r = 0;
    std::vector<Partition> jordan_types;
    std::map<long long, long long> size_by_prime;
    RationalPoly polynomial;   // empty when not fitted (single prime)
    int fitted_degree = -1;    // the claimed orbit dimension
};

struct OrbitCensus {
    Family family = Family::gl;
    int n = 0, r = 0;
    std::vector<long long> primes;
    std::map<long long, std::vector<OrbitRecord>> records_by_prime;
    std::map<long long, long long> point_count_by_prime;
    std::vector<OrbitFamily> families;
    bool matched = true;            // invariant-key matching succeeded
    std::string match_failure;      // diagnostic when it did not
};

// Enumerate + partition per prime, match orbit families across primes by
// invariant key, fit point-count polynomials with exact arithmetic.
// Orbit counts are upper bounds for G(k)-orbit counts (classes may merge over
// extensions); a matching failure is reported, never guessed around.
OrbitCensus census(Family family, int n, int r, const std::vector<long long>& primes,
                   const EnumBudget& budget = {});

// Matching + fitting stage of census, usable on precomputed (e.g. cached)
// per-prime orbit records.
OrbitCensus census_from_records(Family family, int n, int r,
                                const std::vector<long long>& primes,
                                std::map<long long, std::vector<OrbitRecord>> records_by_prime,
                                std::map<long long, long long> point_count_by_prime);

struct TableReport {
    // (n, r) -> value grids assembled from censuses
    std::map<std::pair<int, int>, int> family_counts;     // Table-2 analog (upper bounds)
    std::map<std::pair<int, int>, int> max_degrees;       // Table-3 analog
    std::map<std::pair<int, int>, long long> dim_formula_values;
    std::map<std::pair<int, int>, std::vector<std::string>> polynomials; // Table-4 analog
};

TableReport table_report(const std::vector<OrbitCensus>& censuses);

} // namespace esub
