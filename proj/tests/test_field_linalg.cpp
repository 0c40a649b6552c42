#include <doctest.h>

#include "esub/field.hpp"
#include "esub/matrix.hpp"
#include "esub/rational_poly.hpp"
#include "esub/springer.hpp"
#include "esub/subspace.hpp"

using namespace esub;

TEST_CASE("field construction") {
    FieldCtx f5(5, 1);
    CHECK(f5.p() == 5);
    CHECK(f5.q() == 5);
    CHECK(f5.modulus().empty());

    // exhaustive scan over the 25 monic quadratics, constant term most
    // significant, lands on x^2 + x + 1 (x^2 + 1 splits as (x+2)(x+3))
    FieldCtx f25(5, 2);
    CHECK(f25.q() == 25);
    CHECK(f25.modulus() == std::vector<Fe>{1, 1});

    FieldCtx f49(7, 2);
    CHECK(f49.q() == 49);

    CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(5, 0), std::invalid_argument);
}

TEST_CASE("field axioms, exhaustive over F_25") {
    FieldCtx F(5, 2);
    const unsigned q = F.q();
    for (unsigned a = 0; a < q; ++a) {
        CHECK(F.add(Fe(a), 0) == Fe(a));
        CHECK(F.mul(Fe(a), 1) == Fe(a));
        CHECK(F.add(Fe(a), F.neg(Fe(a))) == 0);
        if (a != 0) CHECK(F.mul(Fe(a), F.inv(Fe(a))) == 1);
        for (unsigned b = 0; b < q; ++b) {
            CHECK(F.add(Fe(a), Fe(b)) == F.add(Fe(b), Fe(a)));
            CHECK(F.mul(Fe(a), Fe(b)) == F.mul(Fe(b), Fe(a)));
            for (unsigned c = 0; c < q; c += 7) {
                CHECK(F.mul(F.add(Fe(a), Fe(b)), Fe(c)) ==
                      F.add(F.mul(Fe(a), Fe(c)), F.mul(Fe(b), Fe(c))));
                CHECK(F.mul(F.mul(Fe(a), Fe(b)), Fe(c)) == F.mul(Fe(a), F.mul(Fe(b), Fe(c))));
            }
        }
    }
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("frobenius") {
    FieldCtx f5(5, 1);
    for (unsigned a = 0; a < 5; ++a) CHECK(f5.frobenius(Fe(a)) == Fe(a)); // Fermat
    FieldCtx F(5, 2);
    CHECK(F.frobenius(0) == 0);
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
        Fe x = rng.elem(F);
        CHECK(F.frobenius(x) == F.pow(x, 5));
        CHECK(F.frobenius(F.frobenius(x)) == x); // order d automorphism
        Fe y = rng.elem(F);
        CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
        CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
    }
}

TEST_CASE("element encoding and primitive element") {
    FieldCtx F(5, 2);
    for (unsigned a = 0; a < F.q(); ++a) {
        auto c = F.coeffs(Fe(a));
        CHECK(c.size() == 2);
        CHECK(F.from_coeffs(c) == Fe(a));
    }
    CHECK(F.from_int(7) == Fe(2));
    CHECK(F.from_int(-1) == Fe(4));

    FieldCtx f5(5, 1);
    CHECK(f5.primitive_element() == Fe(2)); // least generator of (Z/5)^x

    // primitive element really has order q-1
    Fe w = F.primitive_element();
    Fe x = w;
    unsigned ord = 1;
    while (x != F.one()) { x = F.mul(x, w); ++ord; }
    CHECK(ord == F.q() - 1);
}

TEST_CASE("mat_rref basics") {
    FieldCtx F(5, 1);
    MatrixFq id = MatrixFq::identity(F, 4);
    auto r = mat_rref(id);
    CHECK(r.rref == id);
    CHECK(r.rank == 4);

    MatrixFq z(F, 3, 5);
    CHECK(mat_rref(z).rank == 0);
    CHECK(mat_rref(z).rref == z);
}

TEST_CASE("mat_rref preserves the row space") {
    FieldCtx F(5, 1);
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        MatrixFq m = random_matrix(F, 3, rng); // reuse square sampler via resize below
        MatrixFq a(F, 4, 9);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 9; ++j) a(i, j) = rng.elem(F);
        auto r = mat_rref(a);
        std::vector<std::vector<Fe>> orig, reduced;
        for (int i = 0; i < 4; ++i) {
            std::vector<Fe> row(9);
            for (int j = 0; j < 9; ++j) row[j] = a(i, j);
            orig.push_back(row);
        }
        for (int i = 0; i < r.rank; ++i) {
            std::vector<Fe> row(9);
            for (int j = 0; j < 9; ++j) row[j] = r.rref(i, j);
            reduced.push_back(row);
        }
        Subspace so = Subspace::from_vectors(F, 9, orig);
        Subspace sr = Subspace::from_vectors(F, 9, reduced);
        for (const auto& v : orig) CHECK(sr.contains(F, v));
        for (const auto& v : reduced) CHECK(so.contains(F, v));
        (void)m;
    }
}

TEST_CASE("matrix arithmetic and inverse") {
    FieldCtx F(5, 2);
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        MatrixFq a = random_matrix(F, 3, rng), b = random_matrix(F, 3, rng),
                 c = random_matrix(F, 3, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == MatrixFq(F, 3, 3));
        MatrixFq g = random_invertible(F, 3, rng);
        auto gi = g.inverse();
        REQUIRE(gi.has_value());
        CHECK(g * *gi == MatrixFq::identity(F, 3));
        CHECK(*gi * g == MatrixFq::identity(F, 3));
    }
    // singular
    MatrixFq s(F, 2, 2);
    s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
    CHECK(!s.inverse().has_value());
}

TEST_CASE("subspace canonical forms") {
    FieldCtx F(5, 1);
    std::vector<Fe> e1{1, 0, 0}, e2{0, 1, 0};
    std::vector<Fe> e12{1, 1, 0};
    Subspace s = Subspace::from_vectors(F, 3, {e1, e12});
    CHECK(s.rank() == 2);
    CHECK(s.basis_row(0) == e1);
    CHECK(s.basis_row(1) == e2);

    std::vector<Fe> v{2, 3, 1};
    std::vector<Fe> v2{4, 1, 2}; // 2v
    Subspace line = Subspace::from_vectors(F, 3, {v, v2});
    CHECK(line.rank() == 1);
    CHECK(line.basis_row(0) == std::vector<Fe>{1, 4, 3}); // v normalized by 1/2 = 3

    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Fe>> vs(3, std::vector<Fe>(9));
        MatrixFq stacked(F, 3, 9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 9; ++j) stacked(i, j) = vs[i][j] = rng.elem(F);
        CHECK(Subspace::from_vectors(F, 9, vs).rank() == mat_rank(stacked));
    }
}

TEST_CASE("subspace uniqueness under change of spanning set") {
    FieldCtx F(5, 1);
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::vector<std::vector<Fe>> vs(3, std::vector<Fe>(7));
        for (auto& v : vs)
            for (auto& x : v) x = rng.elem(F);
        Subspace s = Subspace::from_vectors(F, 7, vs);
        // random invertible recombination of the spanning set
        MatrixFq g = random_invertible(F, 3, rng);
        std::vector<std::vector<Fe>> ws(3, std::vector<Fe>(7, 0));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 7; ++j)
                    ws[i][j] = F.add(ws[i][j], F.mul(g(i, k), vs[k][j]));
        Subspace s2 = Subspace::from_vectors(F, 7, ws);
        CHECK(s == s2);
        CHECK(s.key() == s2.key());
    }
}

TEST_CASE("subspace containment and ordering") {
    FieldCtx F(5, 1);
    Subspace z = Subspace::zero(F, 4);
    CHECK(z.rank() == 0);
    Subspace s = Subspace::from_vectors(F, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK(s.contains(F, z));
    CHECK(s.contains(F, {2, 0, 3, 0}));
    CHECK(!s.contains(F, {0, 1, 0, 0}));
    CHECK(s.contains(F, s));
    CHECK(z < s);
}

TEST_CASE("lagrange_fit examples") {
    using P = std::pair<BigInt, BigInt>;
    RationalPoly lin = lagrange_fit({P{5, 6}, P{7, 8}, P{11, 12}}, 1);
    CHECK(lin.degree() == 1);
    CHECK(lin.coeffs() == std::vector<BigRat>{1, 1}); // p + 1

    RationalPoly c = lagrange_fit({P{5, 31}}, 0);
    CHECK(c.degree() == 0);
    CHECK(c.evaluate(100) == 31);

    // (p^2+p+1)(p+1)(p-1) = p^4 + p^3 - p - 1
    auto prod = [](long long p) { return (p * p + p + 1) * (p + 1) * (p - 1); };
    std::vector<P> pts;
    for (long long p : {5, 7, 11, 13, 17}) pts.emplace_back(p, prod(p));
    RationalPoly big = lagrange_fit(pts, 4);
    CHECK(big.degree() == 4);
    CHECK(big.is_integral());
    CHECK(big.coeffs() == std::vector<BigRat>{-1, -1, 0, 1, 1});
    for (long long p : {2, 3, 19, 101}) CHECK(big.evaluate(p) == prod(p));
}

TEST_CASE("lagrange_fit error paths") {
    using P = std::pair<BigInt, BigInt>;
    CHECK_THROWS_AS(lagrange_fit({P{5, 6}, P{5, 7}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_fit({P{5, 6}}, 1), std::invalid_argument); // too few points
    // held-out point off the interpolant is a hard error, not a warning
    CHECK_THROWS_AS(lagrange_fit({P{5, 6}, P{7, 8}, P{11, 13}}, 1), std::runtime_error);
}

TEST_CASE("rational poly printing and evaluation") {
    RationalPoly q(std::vector<BigRat>{1, 1, 1}); // p^2 + p + 1
    CHECK(q.evaluate(5) == 31);
    CHECK(q.to_string() == "p^2 + p + 1");
    CHECK(RationalPoly::zero().degree() == -1);
    RationalPoly half(std::vector<BigRat>{BigRat(1, 2)});
    CHECK(!half.is_integral());
    CHECK(q.is_integral());
}
