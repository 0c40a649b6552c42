#include "esub/matrix.hpp"

#include <stdexcept>

namespace esub {

MatrixFq MatrixFq::identity(const FieldCtx& F, int n) {
    MatrixFq m(F, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F.one();
    return m;
}

bool MatrixFq::is_zero() const {
    for (Fe x : a_)
        if (x != 0) return false;
    return true;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: dimension mismatch");
    MatrixFq r(*F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
    return r;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: dimension mismatch");
    MatrixFq r(*F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
    return r;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: dimension mismatch");
    MatrixFq r(*F_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Fe aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r(i, j) = F_->add(r(i, j), F_->mul(aik, o(k, j)));
        }
    return r;
}

MatrixFq MatrixFq::scaled(Fe c) const {
    MatrixFq r(*F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
    return r;
}

MatrixFq MatrixFq::pow(unsigned long long e) const {
    if (!is_square()) throw std::invalid_argument("matrix pow: not square");
    MatrixFq r = identity(*F_, rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MatrixFq MatrixFq::frobenius() const {
    MatrixFq r(*F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->frobenius(a_[i]);
    return r;
}

std::optional<MatrixFq> MatrixFq::inverse() const {
    if (!is_square()) throw std::invalid_argument("matrix inverse: not square");
    const FieldCtx& F = *F_;
    int n = rows_;
    MatrixFq a = *this, inv = identity(F, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Fe s = F.inv(a(col, col));
        for (int j = 0; j < n; ++j) {
            a(col, j) = F.mul(a(col, j), s);
            inv(col, j) = F.mul(inv(col, j), s);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Fe f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) = F.sub(a(i, j), F.mul(f, a(col, j)));
                inv(i, j) = F.sub(inv(i, j), F.mul(f, inv(col, j)));
            }
        }
    }
    return inv;
}

MatrixFq MatrixFq::from_flat(const FieldCtx& F, int rows, int cols, const std::vector<Fe>& flat) {
    if (flat.size() != std::size_t(rows) * cols) throw std::invalid_argument("from_flat: size mismatch");
    MatrixFq m(F, rows, cols);
    m.a_ = flat;
    return m;
}

RrefResult mat_rref(const MatrixFq& m) {
    const FieldCtx& F = m.field();
    MatrixFq a = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        Fe s = F.inv(a(row, col));
        for (int j = col; j < a.cols(); ++j) a(row, j) = F.mul(a(row, j), s);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Fe f = a(i, col);
            for (int j = col; j < a.cols(); ++j)
                a(i, j) = F.sub(a(i, j), F.mul(f, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), std::move(pivots), row};
}

int mat_rank(const MatrixFq& m) { return mat_rref(m).rank; }

} // namespace esub
