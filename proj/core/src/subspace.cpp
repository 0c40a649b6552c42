#include "esub/subspace.hpp"

#include <stdexcept>

namespace esub {

Subspace Subspace::from_vectors(const FieldCtx& F, int ambient_dim,
                                const std::vector<std::vector<Fe>>& vectors) {
    MatrixFq m(F, int(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (int(vectors[i].size()) != ambient_dim)
            throw std::invalid_argument("Subspace: vector length != ambient dimension");
        for (int j = 0; j < ambient_dim; ++j) m(int(i), j) = vectors[i][j];
    }
    RrefResult r = mat_rref(m);
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    s.rank_ = r.rank;
    s.pivots_ = r.pivots;
    s.basis_.assign(r.rref.data().begin(), r.rref.data().begin() + std::size_t(r.rank) * ambient_dim);
    return s;
}

Subspace Subspace::zero(const FieldCtx& F, int ambient_dim) {
    return from_vectors(F, ambient_dim, {});
}

std::vector<Fe> Subspace::basis_row(int i) const {
    return std::vector<Fe>(basis_.begin() + std::size_t(i) * ambient_dim_,
                           basis_.begin() + std::size_t(i + 1) * ambient_dim_);
}

bool Subspace::contains(const FieldCtx& F, const std::vector<Fe>& v) const {
    if (int(v.size()) != ambient_dim_) throw std::invalid_argument("Subspace::contains: length mismatch");
    std::vector<Fe> r = v;
    for (int i = 0; i < rank_; ++i) {
        Fe c = r[pivots_[i]];
        if (c == 0) continue;
        for (int j = 0; j < ambient_dim_; ++j)
            r[j] = F.sub(r[j], F.mul(c, basis_[std::size_t(i) * ambient_dim_ + j]));
    }
    for (Fe x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const FieldCtx& F, const Subspace& other) const {
    for (int i = 0; i < other.rank(); ++i)
        if (!contains(F, other.basis_row(i))) return false;
    return true;
}

std::string Subspace::key() const {
    std::string k;
    k.reserve(basis_.size() + 1);
    k.push_back(char(rank_));
    for (Fe x : basis_) k.push_back(char(x));
    return k;
}

} // namespace esub
