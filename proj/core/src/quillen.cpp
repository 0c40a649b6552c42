#include "esub/quillen.hpp"

#include <algorithm>
#include <stdexcept>

namespace esub {

BridgeCtx::BridgeCtx(const AmbientAlgebra& algebra)
    : algebra_(&algebra), fp_(algebra.field().p(), 1) {
    if (int(algebra.field().p()) < algebra.n())
        throw std::invalid_argument("BridgeCtx: requires p >= n");
}

std::vector<Fe> BridgeCtx::flatten(const std::vector<Fe>& fq_coords) const {
    const FieldCtx& F = fq();
    std::vector<Fe> out(static_cast<std::size_t>(flat_dim()));
    for (std::size_t j = 0; j < fq_coords.size(); ++j) {
        std::vector<Fe> c = F.coeffs(fq_coords[j]);
        for (int t = 0; t < d(); ++t) out[j * d() + t] = c[t];
    }
    return out;
}

std::vector<Fe> BridgeCtx::unflatten(const std::vector<Fe>& fp_coords) const {
    const FieldCtx& F = fq();
    std::vector<Fe> out(static_cast<std::size_t>(algebra_->dim()));
    std::vector<Fe> c(static_cast<std::size_t>(d()));
    for (std::size_t j = 0; j < out.size(); ++j) {
        for (int t = 0; t < d(); ++t) c[t] = fp_coords[j * d() + t];
        out[j] = F.from_coeffs(c);
    }
    return out;
}

std::vector<Fe> BridgeCtx::flatten_scaled(const std::vector<Fe>& fq_coords, Fe lambda) const {
    const FieldCtx& F = fq();
    std::vector<Fe> scaled(fq_coords.size());
    for (std::size_t j = 0; j < fq_coords.size(); ++j) scaled[j] = F.mul(fq_coords[j], lambda);
    return flatten(scaled);
}

ElemAbelianSubgroup subgroup_from_generators(const BridgeCtx& ctx,
                                             const std::vector<MatrixFq>& unipotents) {
    const AmbientAlgebra& alg = ctx.algebra();
    std::vector<MatrixFq> logs;
    for (const MatrixFq& g : unipotents) {
        MatrixFq N = g - MatrixFq::identity(ctx.fq(), alg.n());
        if (!is_nilpotent(N).nilpotent)
            throw std::invalid_argument("subgroup_from_generators: generator is not unipotent");
        logs.push_back(log_unipotent(g));
    }
    for (std::size_t i = 0; i < unipotents.size(); ++i)
        for (std::size_t j = i + 1; j < unipotents.size(); ++j)
            if (unipotents[i] * unipotents[j] != unipotents[j] * unipotents[i])
                throw std::invalid_argument("subgroup_from_generators: generators do not commute");
    std::vector<std::vector<Fe>> vecs;
    for (const MatrixFq& X : logs) vecs.push_back(ctx.flatten(alg.to_coords(X)));
    return ElemAbelianSubgroup{&ctx, Subspace::from_vectors(ctx.fp(), ctx.flat_dim(), vecs)};
}

ElemAbelianSubgroup subgroup_from_log_space(const BridgeCtx& ctx, const Subspace& log_space) {
    if (log_space.ambient_dim() != ctx.flat_dim())
        throw std::invalid_argument("subgroup_from_log_space: wrong ambient dimension");
    // validate: all log-space points must be pairwise-commuting nilpotents;
    // basis-level checks suffice by bilinearity
    std::vector<MatrixFq> mats;
    for (int i = 0; i < log_space.rank(); ++i)
        mats.push_back(ctx.algebra().from_coords(ctx.unflatten(log_space.basis_row(i))));
    const unsigned p = ctx.fq().p();
    for (const MatrixFq& X : mats)
        if (!X.pow(p).is_zero())
            throw std::invalid_argument("subgroup_from_log_space: basis element with X^p != 0");
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!bracket(mats[i], mats[j]).is_zero())
                throw std::invalid_argument("subgroup_from_log_space: basis does not commute");
    return ElemAbelianSubgroup{&ctx, log_space};
}

bool is_fq_linear(const ElemAbelianSubgroup& E) {
    const BridgeCtx& ctx = *E.ctx;
    if (ctx.d() == 1) return true;
    const Fe lambda0 = Fe(ctx.fq().p()); // the class of x, generating F_q over F_p
    for (int i = 0; i < E.log_space.rank(); ++i) {
        std::vector<Fe> v = ctx.unflatten(E.log_space.basis_row(i));
        if (!E.log_space.contains(ctx.fp(), ctx.flatten_scaled(v, lambda0))) return false;
    }
    return true;
}

ElemAbelianSubgroup fq_closure(const ElemAbelianSubgroup& E) {
    const BridgeCtx& ctx = *E.ctx;
    std::vector<std::vector<Fe>> vecs;
    for (int i = 0; i < E.log_space.rank(); ++i) {
        std::vector<Fe> v = ctx.unflatten(E.log_space.basis_row(i));
        Fe lambda = ctx.fq().one();
        const Fe lambda0 = ctx.d() == 1 ? ctx.fq().one() : Fe(ctx.fq().p());
        for (int t = 0; t < ctx.d(); ++t) {
            vecs.push_back(ctx.flatten_scaled(v, lambda));
            lambda = ctx.fq().mul(lambda, lambda0);
        }
    }
    return ElemAbelianSubgroup{&ctx, Subspace::from_vectors(ctx.fp(), ctx.flat_dim(), vecs)};
}

ElemAbelianSubgroup bridge_forward(const BridgeCtx& ctx, const ElemSubalgebra& eps) {
    if (eps.algebra != &ctx.algebra())
        throw std::invalid_argument("bridge_forward: subalgebra from a different ambient algebra");
    std::vector<std::vector<Fe>> vecs;
    const Fe lambda0 = ctx.d() == 1 ? ctx.fq().one() : Fe(ctx.fq().p());
    for (int i = 0; i < eps.space.rank(); ++i) {
        std::vector<Fe> v = eps.space.basis_row(i);
        Fe lambda = ctx.fq().one();
        for (int t = 0; t < ctx.d(); ++t) {
            vecs.push_back(ctx.flatten_scaled(v, lambda));
            lambda = ctx.fq().mul(lambda, lambda0);
        }
    }
    return ElemAbelianSubgroup{&ctx, Subspace::from_vectors(ctx.fp(), ctx.flat_dim(), vecs)};
}

ElemSubalgebra bridge_backward(const BridgeCtx& ctx, const ElemAbelianSubgroup& E) {
    if (!is_fq_linear(E))
        throw std::invalid_argument("bridge_backward: subgroup is not F_q-linear");
    std::vector<std::vector<Fe>> vecs;
    for (int i = 0; i < E.log_space.rank(); ++i) vecs.push_back(ctx.unflatten(E.log_space.basis_row(i)));
    Subspace space = Subspace::from_vectors(ctx.fq(), ctx.algebra().dim(), vecs);
    if (space.rank() * ctx.d() != E.rank())
        throw std::logic_error("bridge_backward: rank is not rank(E)/d");
    return make_elem_subalgebra(ctx.algebra(), space);
}

std::vector<MatrixFq> subgroup_elements(const ElemAbelianSubgroup& E) {
    const BridgeCtx& ctx = *E.ctx;
    const unsigned p = ctx.fp().q();
    const int rank = E.rank();
    std::vector<MatrixFq> out;
    std::vector<Fe> c(static_cast<std::size_t>(rank), 0);
    const int flat = ctx.flat_dim();
    for (;;) {
        std::vector<Fe> v(static_cast<std::size_t>(flat), 0);
        for (int i = 0; i < rank; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < flat; ++j)
                v[j] = ctx.fp().add(v[j], ctx.fp().mul(c[i], E.log_space.basis()[std::size_t(i) * flat + j]));
        }
        out.push_back(exp_nilpotent(ctx.algebra().from_coords(ctx.unflatten(v))));
        int k = 0;
        while (k < rank && ++c[std::size_t(k)] == p) c[std::size_t(k++)] = 0;
        if (k == rank) break;
    }
    std::sort(out.begin(), out.end(), [](const MatrixFq& a, const MatrixFq& b) { return a.data() < b.data(); });
    return out;
}

ElemAbelianSubgroup conjugate_subgroup(const MatrixFq& g, const ElemAbelianSubgroup& E) {
    const BridgeCtx& ctx = *E.ctx;
    auto ginv = g.inverse();
    if (!ginv) throw std::invalid_argument("conjugate_subgroup: singular g");
    std::vector<std::vector<Fe>> vecs;
    for (int i = 0; i < E.log_space.rank(); ++i) {
        MatrixFq X = ctx.algebra().from_coords(ctx.unflatten(E.log_space.basis_row(i)));
        vecs.push_back(ctx.flatten(ctx.algebra().to_coords(g * X * *ginv)));
    }
    return ElemAbelianSubgroup{&ctx, Subspace::from_vectors(ctx.fp(), ctx.flat_dim(), vecs)};
}

} // namespace esub
