#pragma once

#include "esub/matrix.hpp"

#include <string>
#include <vector>

namespace esub {

// Canonical RREF basis of a linear subspace of F^m.  Unique per subspace, so
// equality, ordering, and hashing are structural.
class Subspace {
public:
    Subspace() = default;

    // Span of the given m-vectors; dependent/duplicate vectors collapse.
    static Subspace from_vectors(const FieldCtx& F, int ambient_dim,
                                 const std::vector<std::vector<Fe>>& vectors);
    static Subspace zero(const FieldCtx& F, int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int rank() const { return rank_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // rank x ambient_dim RREF rows, row-major.
    const std::vector<Fe>& basis() const { return basis_; }
    std::vector<Fe> basis_row(int i) const;

    bool contains(const FieldCtx& F, const std::vector<Fe>& v) const;
    bool contains(const FieldCtx& F, const Subspace& other) const;

    // Packed canonical key (one byte per entry; q < 256 always at desk scale).
    std::string key() const;

    bool operator==(const Subspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

private:
    int ambient_dim_ = 0;
    int rank_ = 0;
    std::vector<Fe> basis_;
    std::vector<int> pivots_;
};

} // namespace esub
