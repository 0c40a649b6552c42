#include "esub/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace esub {

Family family_from_string(const std::string& s) {
    if (s == "gl") return Family::gl;
    if (s == "sl") return Family::sl;
    if (s == "so") return Family::so;
    if (s == "u" || s == "b-nilradical") return Family::u;
    throw std::invalid_argument("unknown algebra family: " + s);
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::so: return "so";
        case Family::u: return "u";
    }
    return "?";
}

AmbientAlgebra::AmbientAlgebra(Family family, int n, const FieldCtx& field)
    : family_(family), n_(n), F_(&field) {
    if (n < 2) throw std::invalid_argument("AmbientAlgebra: n must be >= 2");
    if (family == Family::so) {
        if (field.p() == 2) throw std::invalid_argument("AmbientAlgebra: so_n requires odd p");
    } else {
        if (int(field.p()) < n)
            throw std::invalid_argument("AmbientAlgebra: condition (*) violated, p = " +
                                        std::to_string(field.p()) + " < n = " + std::to_string(n));
    }
    build_basis();

    // stacked flattened basis with transform for coordinate extraction
    const int m2 = n_ * n_;
    const int dim = int(basis_.size());
    MatrixFq aug(*F_, dim, m2 + dim);
    for (int i = 0; i < dim; ++i) {
        const auto& flat = basis_[i].data();
        for (int j = 0; j < m2; ++j) aug(i, j) = flat[j];
        aug(i, m2 + i) = F_->one();
    }
    // row-reduce the left block only; the right block records the transform
    int row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m2 && row < dim; ++col) {
        int piv = -1;
        for (int i = row; i < dim; ++i)
            if (aug(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m2 + dim; ++j) std::swap(aug(piv, j), aug(row, j));
        Fe s = F_->inv(aug(row, col));
        for (int j = 0; j < m2 + dim; ++j) aug(row, j) = F_->mul(aug(row, j), s);
        for (int i = 0; i < dim; ++i) {
            if (i == row || aug(i, col) == 0) continue;
            Fe f = aug(i, col);
            for (int j = 0; j < m2 + dim; ++j)
                aug(i, j) = F_->sub(aug(i, j), F_->mul(f, aug(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    if (row != dim) throw std::logic_error("AmbientAlgebra: basis not linearly independent");
    rref_.resize(std::size_t(dim) * m2);
    transform_.resize(std::size_t(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < m2; ++j) rref_[std::size_t(i) * m2 + j] = aug(i, j);
        for (int j = 0; j < dim; ++j) transform_[std::size_t(i) * dim + j] = aug(i, m2 + j);
    }
    rref_pivots_ = std::move(pivots);

    // closure under bracket
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!contains(bracket(basis_[i], basis_[j])))
                throw std::logic_error("AmbientAlgebra: basis not closed under bracket");
}

void AmbientAlgebra::build_basis() {
    const FieldCtx& F = *F_;
    auto unit = [&](int i, int j) {
        MatrixFq m(F, n_, n_);
        m(i, j) = F.one();
        return m;
    };
    switch (family_) {
        case Family::gl:
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) basis_.push_back(unit(i, j));
            break;
        case Family::sl:
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    if (i != j) basis_.push_back(unit(i, j));
            for (int i = 0; i + 1 < n_; ++i) {
                MatrixFq h(F, n_, n_);
                h(i, i) = F.one();
                h(i + 1, i + 1) = F.neg(F.one());
                basis_.push_back(h);
            }
            break;
        case Family::so:
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j) {
                    MatrixFq m(F, n_, n_);
                    m(i, j) = F.one();
                    m(j, i) = F.neg(F.one());
                    basis_.push_back(m);
                }
            break;
        case Family::u:
            for (int s = 1; s < n_; ++s)
                for (int i = 0; i + s < n_; ++i) basis_.push_back(unit(i, i + s));
            break;
    }
}

MatrixFq AmbientAlgebra::from_coords(const std::vector<Fe>& coords) const {
    if (int(coords.size()) != dim()) throw std::invalid_argument("from_coords: wrong length");
    MatrixFq m(*F_, n_, n_);
    for (int i = 0; i < dim(); ++i) {
        if (coords[i] == 0) continue;
        const auto& flat = basis_[i].data();
        for (std::size_t t = 0; t < flat.size(); ++t)
            m.data()[t] = F_->add(m.data()[t], F_->mul(coords[i], flat[t]));
    }
    return m;
}

std::vector<Fe> AmbientAlgebra::to_coords(const MatrixFq& X) const {
    const int m2 = n_ * n_;
    if (X.rows() != n_ || X.cols() != n_) throw std::invalid_argument("to_coords: wrong shape");
    const auto& x = X.data();
    const int dim = int(basis_.size());
    // x = sum a_i * rref_row_i with a_i = x[pivot_i] when x lies in the span
    std::vector<Fe> a(dim);
    for (int i = 0; i < dim; ++i) a[i] = x[rref_pivots_[i]];
    for (int j = 0; j < m2; ++j) {
        Fe s = 0;
        for (int i = 0; i < dim; ++i)
            if (a[i] != 0) s = F_->add(s, F_->mul(a[i], rref_[std::size_t(i) * m2 + j]));
        if (s != x[j]) throw std::invalid_argument("to_coords: matrix not in the algebra");
    }
    std::vector<Fe> c(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim; ++j)
            c[j] = F_->add(c[j], F_->mul(a[i], transform_[std::size_t(i) * dim + j]));
    }
    return c;
}

bool AmbientAlgebra::contains(const MatrixFq& X) const {
    try {
        to_coords(X);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

MatrixFq bracket(const MatrixFq& X, const MatrixFq& Y) {
    return X * Y - Y * X;
}

NilpotencyResult is_nilpotent(const MatrixFq& X) {
    if (!X.is_square()) throw std::invalid_argument("is_nilpotent: not square");
    if (X.is_zero()) return {true, 1};
    MatrixFq acc = X;
    for (int k = 1; k <= X.rows(); ++k) {
        if (acc.is_zero()) return {true, k};
        acc = acc * X;
    }
    return {false, 0};
}

Partition jordan_type(const MatrixFq& X) {
    const int n = X.rows();
    std::vector<int> ranks{n}; // rank(X^0)
    MatrixFq acc = MatrixFq::identity(X.field(), n);
    for (int k = 1; k <= n; ++k) {
        acc = acc * X;
        ranks.push_back(mat_rank(acc));
    }
    if (ranks[n] != 0) throw std::invalid_argument("jordan_type: matrix not nilpotent");
    Partition parts;
    for (int k = 1; k <= n; ++k) {
        int count = ranks[k - 1] - ranks[k]; // number of parts >= k
        int next = (k < n) ? ranks[k] - ranks[k + 1] : 0;
        for (int t = 0; t < count - next; ++t) parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

bool is_elementary(const AmbientAlgebra& algebra, const Subspace& space) {
    if (space.ambient_dim() != algebra.dim())
        throw std::invalid_argument("is_elementary: subspace not in algebra coordinates");
    std::vector<MatrixFq> mats;
    mats.reserve(space.rank());
    for (int i = 0; i < space.rank(); ++i)
        mats.push_back(algebra.from_coords(space.basis_row(i)));
    const unsigned p = algebra.field().p();
    for (const auto& X : mats)
        if (!X.pow(p).is_zero()) return false;
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!bracket(mats[i], mats[j]).is_zero()) return false;
    return true;
}

ElemSubalgebra make_elem_subalgebra(const AmbientAlgebra& algebra, const Subspace& space) {
    if (!is_elementary(algebra, space))
        throw std::invalid_argument("make_elem_subalgebra: space is not elementary");
    return ElemSubalgebra{&algebra, space};
}

namespace {

template <typename Fn>
void for_each_span_point(const ElemSubalgebra& eps, Fn&& fn) {
    const FieldCtx& F = eps.algebra->field();
    const int r = eps.r();
    std::vector<MatrixFq> basis;
    for (int i = 0; i < r; ++i) basis.push_back(eps.basis_matrix(i));
    std::vector<Fe> c(r, 0);
    const int n = eps.algebra->n();
    for (;;) {
        MatrixFq X(F, n, n);
        for (int i = 0; i < r; ++i) {
            if (c[i] == 0) continue;
            for (std::size_t t = 0; t < X.data().size(); ++t)
                X.data()[t] = F.add(X.data()[t], F.mul(c[i], basis[i].data()[t]));
        }
        fn(X);
        int k = 0;
        while (k < r && ++c[k] == F.q()) c[k++] = 0;
        if (k == r) break;
    }
}

} // namespace

std::map<Partition, long long> jordan_profile(const ElemSubalgebra& eps) {
    std::map<Partition, long long> profile;
    for_each_span_point(eps, [&](const MatrixFq& X) { profile[jordan_type(X)]++; });
    return profile;
}

std::vector<Partition> jordan_support(const ElemSubalgebra& eps) {
    std::map<Partition, long long> profile = jordan_profile(eps);
    std::vector<Partition> support;
    const Partition trivial(std::size_t(eps.algebra->n()), 1);
    for (const auto& [part, count] : profile) {
        if (part == trivial && count == 1) continue; // the zero point
        support.push_back(part);
    }
    return support;
}

} // namespace esub
