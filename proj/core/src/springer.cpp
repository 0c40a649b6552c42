#include "esub/springer.hpp"

#include <sstream>
#include <stdexcept>

namespace esub {

namespace {

void require_regime(const FieldCtx& F, int n, const char* who) {
    if (int(F.p()) < n)
        throw std::domain_error(std::string(who) + ": requires p >= n (p = " +
                                std::to_string(F.p()) + ", n = " + std::to_string(n) + ")");
}

std::string matrix_string(const MatrixFq& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    }
    os << "]";
    return os.str();
}

} // namespace

MatrixFq exp_nilpotent(const MatrixFq& X) {
    const FieldCtx& F = X.field();
    const int n = X.rows();
    require_regime(F, n, "exp_nilpotent");
    if (!is_nilpotent(X).nilpotent) throw std::domain_error("exp_nilpotent: input is not nilpotent");
    const unsigned p = F.p();
    // inverse factorials 1/i! for i < p
    std::vector<Fe> invfact(p);
    invfact[0] = F.one();
    Fe fact = F.one();
    for (unsigned i = 1; i < p; ++i) {
        fact = F.mul(fact, F.from_int(i));
        invfact[i] = F.inv(fact);
    }
    // Horner on matrix powers: p-2 multiplications
    MatrixFq acc(F, n, n);
    for (int i = 0; i < n; ++i) acc(i, i) = invfact[p - 1];
    for (unsigned i = p - 1; i-- > 0;) {
        acc = acc * X;
        for (int t = 0; t < n; ++t) acc(t, t) = F.add(acc(t, t), invfact[i]);
    }
    return acc;
}

MatrixFq log_unipotent(const MatrixFq& u) {
    const FieldCtx& F = u.field();
    const int n = u.rows();
    require_regime(F, n, "log_unipotent");
    MatrixFq N = u - MatrixFq::identity(F, n);
    if (!is_nilpotent(N).nilpotent) throw std::domain_error("log_unipotent: input is not unipotent");
    const unsigned p = F.p();
    // Horner: sum_{i=1}^{p-1} (-1)^{i+1} N^i / i = N * (c1 + N*(c2 + ...))
    MatrixFq acc(F, n, n);
    for (int t = 0; t < n; ++t) {
        Fe c = F.inv(F.from_int(p - 1));
        if ((p - 1) % 2 == 0) c = F.neg(c);
        acc(t, t) = c;
    }
    for (unsigned i = p - 1; i-- > 1;) {
        acc = acc * N;
        Fe c = F.inv(F.from_int(i));
        if (i % 2 == 0) c = F.neg(c);
        for (int t = 0; t < n; ++t) acc(t, t) = F.add(acc(t, t), c);
    }
    return acc * N;
}

MatrixFq unipotent_power(const MatrixFq& g, Fe lambda) {
    return exp_nilpotent(log_unipotent(g).scaled(lambda));
}

MatrixFq random_matrix(const FieldCtx& F, int n, Rng& rng) {
    MatrixFq m(F, n, n);
    for (Fe& x : m.data()) x = rng.elem(F);
    return m;
}

MatrixFq random_invertible(const FieldCtx& F, int n, Rng& rng) {
    for (;;) {
        MatrixFq m = random_matrix(F, n, rng);
        if (mat_rank(m) == n) return m;
    }
}

MatrixFq random_strictly_upper(const FieldCtx& F, int n, Rng& rng) {
    MatrixFq m(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = rng.elem(F);
    return m;
}

MatrixFq random_nilpotent(const FieldCtx& F, int n, Rng& rng) {
    MatrixFq u = random_strictly_upper(F, n, rng);
    MatrixFq g = random_invertible(F, n, rng);
    return g * u * *g.inverse();
}

SuiteReport springer_identity_suite(const AmbientAlgebra& algebra, long long trials,
                                    std::uint64_t rng_seed) {
    const FieldCtx& F = algebra.field();
    const int n = algebra.n();
    require_regime(F, n, "springer_identity_suite");
    Rng rng(rng_seed);
    SuiteReport report;
    report.trials = trials;

    auto fail = [&](const std::string& check, const MatrixFq& a, const MatrixFq& b) {
        ++report.failures;
        if (report.witnesses.size() < 8)
            report.witnesses.push_back({check, matrix_string(a) + " vs " + matrix_string(b)});
    };
    auto check_eq = [&](const std::string& check, const MatrixFq& a, const MatrixFq& b) {
        ++report.checks_run;
        if (a != b) fail(check, a, b);
    };

    for (long long t = 0; t < trials; ++t) {
        // commuting pair inside a conjugated strictly-upper algebra
        MatrixFq g = random_invertible(F, n, rng);
        MatrixFq ginv = *g.inverse();
        MatrixFq U = random_strictly_upper(F, n, rng);
        // a commuting partner: polynomial in U with zero constant term
        MatrixFq V(F, n, n);
        {
            MatrixFq acc = U;
            for (int k = 1; k < n; ++k) {
                Fe c = rng.elem(F);
                if (c != 0) V = V + acc.scaled(c);
                acc = acc * U;
            }
        }
        MatrixFq X = g * U * ginv, Y = g * V * ginv;

        // (a) commutation equivalence
        ++report.checks_run;
        MatrixFq eX = exp_nilpotent(X), eY = exp_nilpotent(Y);
        if (eX * eY != eY * eX) fail("commuting X,Y give commuting exp", eX * eY, eY * eX);
        MatrixFq Z = random_nilpotent(F, n, rng);
        if (!bracket(X, Z).is_zero()) {
            ++report.checks_run;
            MatrixFq eZ = exp_nilpotent(Z);
            if (eX * eZ == eZ * eX) fail("non-commuting X,Z give non-commuting exp", eX, eZ);
        }

        // (b) sum-to-product
        check_eq("exp(X+Y) = exp(X)exp(Y)", exp_nilpotent(X + Y), eX * eY);

        // (c) round trips
        check_eq("log(exp(X)) = X", log_unipotent(eX), X);
        check_eq("exp(log(u)) = u", exp_nilpotent(log_unipotent(eX)), eX);

        // (d) generalized power laws
        Fe lam = rng.elem(F), mu = rng.elem(F);
        check_eq("g^l * g^m = g^(l+m)", unipotent_power(eX, lam) * unipotent_power(eX, mu),
                 unipotent_power(eX, F.add(lam, mu)));
        check_eq("(g^l)^m = g^(lm)", unipotent_power(unipotent_power(eX, lam), mu),
                 unipotent_power(eX, F.mul(lam, mu)));
        check_eq("commuting powers commute",
                 unipotent_power(eX, lam) * unipotent_power(eY, mu),
                 unipotent_power(eY, mu) * unipotent_power(eX, lam));
        MatrixFq h = random_invertible(F, n, rng);
        MatrixFq hinv = *h.inverse();
        check_eq("(h k h^-1)^l = h k^l h^-1", unipotent_power(h * eX * hinv, lam),
                 h * unipotent_power(eX, lam) * hinv);

        // (e) Frobenius equivariance
        check_eq("exp(X^Frob) = exp(X)^Frob", exp_nilpotent(X.frobenius()), eX.frobenius());

        // equivariance under conjugation
        check_eq("exp(A X A^-1) = A exp(X) A^-1", exp_nilpotent(h * X * hinv), h * eX * hinv);
    }
    return report;
}

} // namespace esub
