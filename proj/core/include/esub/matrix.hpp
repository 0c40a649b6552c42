#pragma once

#include "esub/field.hpp"

#include <optional>
#include <vector>

namespace esub {

// Dense row-major matrix over a FieldCtx.  The context pointer is non-owning;
// contexts outlive every matrix built on them.
class MatrixFq {
public:
    MatrixFq() = default;
    MatrixFq(const FieldCtx& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static MatrixFq identity(const FieldCtx& F, int n);

    const FieldCtx& field() const { return *F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fe operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    Fe& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const std::vector<Fe>& data() const { return a_; }
    std::vector<Fe>& data() { return a_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    MatrixFq operator+(const MatrixFq& o) const;
    MatrixFq operator-(const MatrixFq& o) const;
    MatrixFq operator*(const MatrixFq& o) const;
    MatrixFq scaled(Fe c) const;
    bool operator==(const MatrixFq& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatrixFq& o) const { return !(*this == o); }

    MatrixFq pow(unsigned long long e) const;

    // Entry-wise x -> x^p.
    MatrixFq frobenius() const;

    // Gauss-Jordan inverse; nullopt when singular.
    std::optional<MatrixFq> inverse() const;

    std::vector<Fe> flatten() const { return a_; }
    static MatrixFq from_flat(const FieldCtx& F, int rows, int cols, const std::vector<Fe>& flat);

private:
    const FieldCtx* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Fe> a_;
};

struct RrefResult {
    MatrixFq rref;
    std::vector<int> pivots;
    int rank = 0;
};

// Exact reduced row-echelon form; first-nonzero pivot scan in column order.
RrefResult mat_rref(const MatrixFq& m);

int mat_rank(const MatrixFq& m);

} // namespace esub
