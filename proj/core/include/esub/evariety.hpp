#pragma once

#include "esub/liealg.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace esub {

// A budget violation names the budget; callers may retry with the other
// enumerator or a larger cap.  Never a silent truncation.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct EnumBudget {
    long long line_budget = 1'000'000;          // projective nilpotent lines (naive)
    long long canonical_form_cap = 1ll << 25;   // distinct canonical forms (seeded)
};

enum class EnumMethod { naive, seeded };

// Deduplicated set of canonical elementary-subalgebra points, kept sorted for
// deterministic output.
struct PointSet {
    const AmbientAlgebra* algebra = nullptr;
    int r = 0;
    EnumMethod method = EnumMethod::naive;
    std::vector<Subspace> points;

    std::size_t size() const { return points.size(); }
};

// Exhaustive oracle: enumerate nilpotent lines, extend to r-tuples of
// pairwise-commuting independent representatives depth-first, span,
// canonicalize, deduplicate.
PointSet enumerate_naive(const AmbientAlgebra& algebra, int r,
                         const EnumBudget& budget = {});

// Fast enumerator for the gl/sl/u families: depth-first enumeration of
// elementary r-subspaces of the strictly-upper-triangular nilradical, then
// closure under the GL_n generator action.  Every commuting family of
// nilpotent matrices over F_q is simultaneously strictly-upper-
// triangularizable over F_q (common-kernel induction; eigenvalue 0 is
// rational), so the closure reaches every point.
PointSet enumerate_seeded(const AmbientAlgebra& algebra, int r,
                          const EnumBudget& budget = {});

// Elementary r-subspaces of u_n in u-coordinates, the seed set above.
std::vector<Subspace> enumerate_u_interior(const AmbientAlgebra& u_algebra, int r);

// Largest r with E(r, -) nonempty, by type.  Recognized: A<k>, B<k>, C<k>,
// D<k>, E6, E7, E8, F4, G2, and the matrix families gl<n>/sl<n>.
long long r_max_for_type(const std::string& type);
long long r_max(Family family, int n);

// (n+r-1)(n-1) - r^2.
long long dim_formula(int r, int n);

} // namespace esub
