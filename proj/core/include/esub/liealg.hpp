#pragma once

#include "esub/matrix.hpp"
#include "esub/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace esub {

enum class Family { gl, sl, so, u };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Partition of n, parts weakly decreasing.
using Partition = std::vector<int>;

// An ambient matrix Lie algebra with a fixed ordered basis over the prime
// field.  Coordinates with respect to that basis are the coordinate system for
// every Subspace downstream; the order is part of the on-disk format.
//
// Basis conventions:
//   gl: E_ij ordered row-major
//   sl: E_ij (i != j) row-major, then E_ii - E_{i+1,i+1}
//   so: E_ij - E_ji for i < j, lexicographic
//   u:  E_ij for i < j, ordered by superdiagonal (j-i) then row
class AmbientAlgebra {
public:
    AmbientAlgebra(Family family, int n, const FieldCtx& field);

    Family family() const { return family_; }
    int n() const { return n_; }
    const FieldCtx& field() const { return *F_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<MatrixFq>& basis() const { return basis_; }

    // Bound used by the p >= h test; n for the gl/sl/u family.
    int coxeter_bound() const { return n_; }

    MatrixFq from_coords(const std::vector<Fe>& coords) const;
    // Throws when X is not in the algebra's span.
    std::vector<Fe> to_coords(const MatrixFq& X) const;
    bool contains(const MatrixFq& X) const;

private:
    void build_basis();
    Family family_;
    int n_;
    const FieldCtx* F_;
    std::vector<MatrixFq> basis_;
    // coordinate solver data: RREF of the stacked flattened basis plus the
    // transform taking (x at pivot columns) to coordinates
    std::vector<Fe> rref_;        // dim x n^2
    std::vector<int> rref_pivots_;
    std::vector<Fe> transform_;   // dim x dim, coords = a * transform_
};

// XY - YX.
MatrixFq bracket(const MatrixFq& X, const MatrixFq& Y);

struct NilpotencyResult {
    bool nilpotent = false;
    int index = 0; // least k with X^k = 0 when nilpotent
};
NilpotencyResult is_nilpotent(const MatrixFq& X);

// Jordan type of a nilpotent matrix via the rank sequence of its powers.
Partition jordan_type(const MatrixFq& X);

// A validated elementary subalgebra point: abelian, trivial restriction,
// stored as a canonical Subspace in ambient coordinates.
struct ElemSubalgebra {
    const AmbientAlgebra* algebra = nullptr;
    Subspace space;
    int r() const { return space.rank(); }
    MatrixFq basis_matrix(int i) const { return algebra->from_coords(space.basis_row(i)); }
};

// True iff all basis pairs commute and each basis matrix satisfies X^p = 0.
// For commuting nilpotents with p >= n this extends to the whole span, so the
// basis-level check decides elementarity of the subspace.
bool is_elementary(const AmbientAlgebra& algebra, const Subspace& space);

// Throws std::invalid_argument when the space is not elementary.
ElemSubalgebra make_elem_subalgebra(const AmbientAlgebra& algebra, const Subspace& space);

// Multiset of Jordan types over all q^r points of the span.
std::map<Partition, long long> jordan_profile(const ElemSubalgebra& eps);

// Jordan types of the nonzero points only (the cross-prime matching support).
std::vector<Partition> jordan_support(const ElemSubalgebra& eps);

} // namespace esub
