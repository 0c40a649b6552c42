#pragma once

#include "esub/liealg.hpp"
#include "esub/springer.hpp"

#include <vector>

namespace esub {

// Shared context for the subalgebra <-> subgroup correspondence: the ambient
// algebra over F_q plus the prime field used for log-space coordinates.
//
// Subgroups are stored as F_p-log-spaces, never as element sets: equality is
// the canonical RREF over F_p and rank-6 subgroups stay cheap.  Flattening
// F_q -> F_p^d maps algebra coordinate j to flat coordinates j*d + t, the
// field-basis index t (coefficient of the modulus-power basis) varying
// fastest.
class BridgeCtx {
public:
    explicit BridgeCtx(const AmbientAlgebra& algebra);

    const AmbientAlgebra& algebra() const { return *algebra_; }
    const FieldCtx& fq() const { return algebra_->field(); }
    const FieldCtx& fp() const { return fp_; }
    int d() const { return int(fq().d()); }
    int flat_dim() const { return algebra_->dim() * d(); }

    std::vector<Fe> flatten(const std::vector<Fe>& fq_coords) const;
    std::vector<Fe> unflatten(const std::vector<Fe>& fp_coords) const;
    // flatten(lambda * v) for an F_q coordinate vector v
    std::vector<Fe> flatten_scaled(const std::vector<Fe>& fq_coords, Fe lambda) const;

private:
    const AmbientAlgebra* algebra_;
    FieldCtx fp_;
};

// An elementary abelian unipotent p-subgroup, stored via its log-space: an
// F_p-subspace of pairwise-commuting nilpotents.  |subgroup| = p^rank.
struct ElemAbelianSubgroup {
    const BridgeCtx* ctx = nullptr;
    Subspace log_space; // over F_p, ambient dimension ctx->flat_dim()
    int rank() const { return log_space.rank(); }
};

// log_space = F_p-span of the generators' logs.  Throws std::invalid_argument
// on non-unipotent or non-commuting generators, or outside the p >= n regime.
ElemAbelianSubgroup subgroup_from_generators(const BridgeCtx& ctx,
                                             const std::vector<MatrixFq>& unipotents);

ElemAbelianSubgroup subgroup_from_log_space(const BridgeCtx& ctx, const Subspace& log_space);

// Closure of the log-space under one fixed generator lambda_0 of F_q over F_p;
// sufficient since F_q = F_p[lambda_0] and the space is already F_p-closed.
bool is_fq_linear(const ElemAbelianSubgroup& E);

// The smallest F_q-linear subgroup containing E; rank divisible by d.
ElemAbelianSubgroup fq_closure(const ElemAbelianSubgroup& E);

// The two maps of the subalgebra <-> F_q-linear-subgroup bijection.
ElemAbelianSubgroup bridge_forward(const BridgeCtx& ctx, const ElemSubalgebra& eps);
ElemSubalgebra bridge_backward(const BridgeCtx& ctx, const ElemAbelianSubgroup& E);

// All p^rank group elements, as matrices (exp of every log-space point).
std::vector<MatrixFq> subgroup_elements(const ElemAbelianSubgroup& E);

ElemAbelianSubgroup conjugate_subgroup(const MatrixFq& g, const ElemAbelianSubgroup& E);

} // namespace esub
