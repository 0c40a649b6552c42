// Acceptance gate: one line per criterion.  Criterion 7 enumerates ~3.2M
// points and runs only when ESUB_SLOW=1 is set in the environment.
#include "esub/census_io.hpp"
#include "esub/quillen.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

using namespace esub;

namespace {

int g_failures = 0;

void run(int id, const std::string& desc, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    if (error.empty()) {
        std::cout << "[PASS] criterion " << id << ": " << desc << " (" << buf << " s)\n";
    } else {
        ++g_failures;
        std::cout << "[FAIL] criterion " << id << ": " << desc << " (" << buf
                  << " s) -- " << error << "\n";
    }
    std::cout.flush();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

MatrixFq elem(const FieldCtx& F, int n, int i, int j) {
    MatrixFq e(F, n, n);
    e(i, j) = F.one();
    return e;
}

// --- criterion bodies -------------------------------------------------------

void criterion1() {
    struct Cfg { int n; unsigned p, d; };
    for (Cfg c : {Cfg{3, 5, 1}, Cfg{4, 7, 1}, Cfg{3, 5, 2}, Cfg{4, 7, 2}}) {
        FieldCtx F(c.p, c.d);
        AmbientAlgebra alg(Family::gl, c.n, F);
        SuiteReport r = springer_identity_suite(alg, 1000, 0xC0FFEEull + c.n + c.p + c.d);
        std::ostringstream tag;
        tag << "(n=" << c.n << ",p=" << c.p << ",d=" << c.d << ")";
        require(r.trials == 1000, "suite " + tag.str() + " did not run 1000 trials");
        if (!r.all_passed()) {
            std::string w = r.witnesses.empty() ? "" : " first witness: " +
                            r.witnesses[0].check + " " + r.witnesses[0].witness;
            require(false, "suite " + tag.str() + " had failures;" + w);
        }
    }
}

void criterion2() {
    for (long long p : {5, 7, 11}) {
        FieldCtx F(unsigned(p), 1);
        AmbientAlgebra gl2(Family::gl, 2, F);
        PointSet ps = enumerate_seeded(gl2, 1);
        require((long long)ps.size() == p + 1,
                "|E(1,gl2)(F_" + std::to_string(p) + ")| != p+1");
        auto orbits = orbit_partition(ps, gl_generators(2, F));
        require(orbits.size() == 1, "E(1,gl2) should be a single orbit at p=" + std::to_string(p));
        require(orbits[0].size == p + 1, "orbit size mismatch at p=" + std::to_string(p));
    }
}

void criterion3() {
    for (long long p : {5, 7}) {
        FieldCtx F(unsigned(p), 1);
        AmbientAlgebra gl3(Family::gl, 3, F);
        PointSet ps = enumerate_seeded(gl3, 2);
        auto orbits = orbit_partition(ps, gl_generators(3, F));
        long long small = p * p + p + 1;
        long long big = small * (p + 1) * (p - 1);
        require(orbits.size() == 3, "expected 3 orbits at p=" + std::to_string(p));
        require(orbits[0].size == small && orbits[1].size == small && orbits[2].size == big,
                "orbit sizes off at p=" + std::to_string(p));
        require(orbits[2].stabilizer_order == BigInt(p) * p * p * (p - 1) * (p - 1),
                "large-orbit stabilizer is not p^3 (p-1)^2 at p=" + std::to_string(p));
    }
}

void criterion4() {
    struct Cfg { unsigned p, d; };
    for (Cfg c : {Cfg{5, 1}, Cfg{7, 1}, Cfg{5, 2}, Cfg{7, 2}}) {
        FieldCtx F(c.p, c.d);
        AmbientAlgebra so3(Family::so, 3, F);
        PointSet ps = enumerate_naive(so3, 1);
        require(ps.size() == F.q() + 1,
                "|E(1,so3)(F_" + std::to_string(F.q()) + ")| != q+1");
    }
}

void criterion5() {
    for (long long p : {5, 7}) {
        FieldCtx F(unsigned(p), 1);
        AmbientAlgebra u3(Family::u, 3, F);
        PointSet ps = enumerate_seeded(u3, 2);
        require((long long)ps.size() == p + 1, "|E(2,u3)| != p+1 at p=" + std::to_string(p));
        GroupGenerators gens = u_generators(3, F);
        for (const Subspace& s : ps.points)
            for (std::size_t gi = 0; gi < gens.generators.size(); ++gi)
                require(act(gens.generators[gi], gens.inverses[gi], u3, s) == s,
                        "point not fixed by U_3 at p=" + std::to_string(p));
    }
}

void criterion6() {
    OrbitCensus c = census(Family::gl, 3, 2, {5, 7, 11, 13, 17});
    require(c.matched, "census matching failed: " + c.match_failure);
    require(c.families.size() == 3, "expected 3 orbit families");
    require(c.families[0].polynomial.to_string() == "p^2 + p + 1", "first polynomial wrong");
    require(c.families[1].polynomial.to_string() == "p^2 + p + 1", "second polynomial wrong");
    RationalPoly expect(std::vector<BigRat>{-1, -1, 0, 1, 1}); // (p^2+p+1)(p+1)(p-1)
    require(c.families[2].polynomial == expect, "large-family polynomial wrong");
    int maxdeg = 0;
    for (const auto& f : c.families) maxdeg = std::max(maxdeg, f.fitted_degree);
    require(maxdeg == 4, "max fitted degree != 4");
    require(maxdeg == (int)dim_formula(2, 3), "degree disagrees with (n+r-1)(n-1)-r^2");
    require(maxdeg == (3 - 1) * (3 - 1), "degree disagrees with (n-1)^2");
}

void criterion7() {
    FieldCtx F(5, 1);
    AmbientAlgebra gl4(Family::gl, 4, F);
    PointSet ps = enumerate_seeded(gl4, 3);
    // The eight geometric orbits have p=5 point counts
    //   156, 156, 29016, 96720, 116064, 116064, 483600, 2321280.
    // Over F_5 the dimension-8 geometric orbit (483600 points) splits into two
    // rational GL_4(F_5)-classes of sizes 193440 and 290160 (stabilizer orders
    // 600000 and 400000); the published class count merged them, flagging that
    // such merges were inferred rather than computed. The exhaustive partition
    // therefore yields nine classes refining the eight geometric counts.
    const std::vector<long long> sizes = {156,    156,    29016,  96720,  116064,
                                          116064, 193440, 290160, 2321280};
    long long total = 0;
    for (long long s : sizes) total += s;
    require(total == 3163056, "expected total is wrong");
    require((long long)ps.size() == total,
            "|E(3,gl4)(F_5)| = " + std::to_string(ps.size()) + ", expected " +
                std::to_string(total));
    auto orbits = orbit_partition(ps, gl_generators(4, F));
    require(orbits.size() == sizes.size(), "expected 9 orbit classes, got " +
                                               std::to_string(orbits.size()));
    for (std::size_t i = 0; i < sizes.size(); ++i)
        require(orbits[i].size == sizes[i],
                "orbit " + std::to_string(i) + " has size " + std::to_string(orbits[i].size) +
                    ", expected " + std::to_string(sizes[i]));
    require(sizes[6] + sizes[7] == 483600, "split classes do not refine the geometric count");
}

void criterion8() {
    FieldCtx F(5, 1);
    for (int n : {2, 3, 4}) {
        AmbientAlgebra gl(Family::gl, n, F);
        long long rm = r_max(Family::gl, n);
        require(rm == (long long)n * n / 4, "r_max formula off at n=" + std::to_string(n));
        require(enumerate_seeded(gl, int(rm)).size() > 0,
                "E(r_max) empty at n=" + std::to_string(n));
        require(enumerate_seeded(gl, int(rm) + 1).size() == 0,
                "E(r_max+1) nonempty at n=" + std::to_string(n));
    }
    AmbientAlgebra gl4(Family::gl, 4, F);
    PointSet top = enumerate_seeded(gl4, 4);
    require(top.size() == 806, "|E(4,gl4)(F_5)| != 806");
    auto orbits = orbit_partition(top, gl_generators(4, F));
    require(orbits.size() == 1, "E(4,gl4)(F_5) should be one orbit class");
}

bool commutes(const FieldCtx& F, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Fe ab = 0, ba = 0;
            for (int k = 0; k < 3; ++k) {
                ab = F.add(ab, F.mul(a[3 * r + k], b[3 * k + c]));
                ba = F.add(ba, F.mul(b[3 * r + k], a[3 * k + c]));
            }
            if (ab != ba) return false;
        }
    return true;
}

std::string element_signature(std::vector<std::vector<Fe>> elements) {
    std::sort(elements.begin(), elements.end());
    std::string sig;
    sig.reserve(elements.size() * elements.front().size());
    for (const auto& m : elements)
        for (Fe x : m) sig.push_back(char(x));
    return sig;
}

void criterion9() {
    FieldCtx F(5, 1);
    AmbientAlgebra gl3(Family::gl, 3, F);
    BridgeCtx ctx(gl3);
    PointSet ps = enumerate_seeded(gl3, 2);
    require(ps.size() == 806, "expected 806 points");

    // forward images: injective, and the round trip is the identity
    std::unordered_set<std::string> bridge_sigs;
    for (const Subspace& s : ps.points) {
        ElemSubalgebra eps = make_elem_subalgebra(gl3, s);
        ElemAbelianSubgroup E = bridge_forward(ctx, eps);
        require(E.rank() == 2, "forward image has wrong rank");
        require(bridge_backward(ctx, E).space == s, "round trip moved a point");
        std::vector<std::vector<Fe>> data;
        for (const MatrixFq& m : subgroup_elements(E)) data.push_back(m.data());
        bridge_sigs.insert(element_signature(std::move(data)));
    }
    require(bridge_sigs.size() == 806, "bridge_forward is not injective");

    // independent oracle: exhaustive commuting-unipotent-pair search
    std::vector<std::vector<Fe>> unip; // I + N for every nonzero nilpotent N
    {
        std::vector<Fe> c(9, 0);
        MatrixFq N(F, 3, 3);
        for (;;) {
            N.data() = c;
            if (!N.is_zero() && (N * N * N).is_zero()) {
                MatrixFq u = MatrixFq::identity(F, 3) + N;
                unip.push_back(u.data());
            }
            std::size_t k = 0;
            while (k < 9 && ++c[k] == 5) c[k++] = 0;
            if (k == 9) break;
        }
    }
    require(unip.size() == 15624, "unipotent count should be 5^6 - 1");

    auto mul3 = [&](const std::vector<Fe>& a, const std::vector<Fe>& b) {
        std::vector<Fe> out(9, 0);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Fe s = 0;
                for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(a[3 * r + k], b[3 * k + c]));
                out[3 * r + c] = s;
            }
        return out;
    };
    const std::vector<Fe> id = MatrixFq::identity(F, 3).data();

    std::unordered_set<std::string> oracle_sigs;
    for (std::size_t i = 0; i < unip.size(); ++i) {
        // powers of u_i, to skip pairs inside one cyclic subgroup
        std::set<std::vector<Fe>> cyc;
        std::vector<Fe> acc = id;
        for (int k = 0; k < 5; ++k) {
            cyc.insert(acc);
            acc = mul3(acc, unip[i]);
        }
        for (std::size_t j = i + 1; j < unip.size(); ++j) {
            if (!commutes(F, unip[i], unip[j])) continue;
            if (cyc.count(unip[j])) continue;
            // the 25 elements u^a v^b
            std::vector<std::vector<Fe>> els;
            els.reserve(25);
            std::vector<Fe> pa = id;
            for (int a = 0; a < 5; ++a) {
                std::vector<Fe> cur = pa;
                for (int b = 0; b < 5; ++b) {
                    els.push_back(cur);
                    cur = mul3(cur, unip[j]);
                }
                pa = mul3(pa, unip[i]);
            }
            oracle_sigs.insert(element_signature(std::move(els)));
        }
    }
    require(oracle_sigs.size() == 806,
            "oracle found " + std::to_string(oracle_sigs.size()) + " rank-2 subgroups");
    require(oracle_sigs == bridge_sigs, "oracle subgroup set differs from the bridge image");
}

void criterion10() {
    FieldCtx F(5, 2);
    AmbientAlgebra gl3(Family::gl, 3, F);
    BridgeCtx ctx(gl3);
    MatrixFq I = MatrixFq::identity(F, 3);
    MatrixFq X = elem(F, 3, 0, 1), Y = elem(F, 3, 0, 2);
    ElemAbelianSubgroup E = subgroup_from_generators(ctx, {I + X, I + Y});
    require(E.rank() == 2, "example subgroup should have rank 2");
    require(!is_fq_linear(E), "example subgroup must not be F_q-linear");
    ElemAbelianSubgroup C = fq_closure(E);
    require(C.rank() == 4, "closure rank != 4");
    require(is_fq_linear(C), "closure is not F_q-linear");
    require(C.log_space.contains(ctx.fp(), E.log_space), "closure does not contain E");
    // minimality: any F_q-linear subgroup containing E has an F_q-subspace
    // log-space containing the F_q-independent logs X and Y, so rank >= 2d = 4
    Subspace fq_span = Subspace::from_vectors(F, 9, {gl3.to_coords(X), gl3.to_coords(Y)});
    require(fq_span.rank() == 2, "logs are not F_q-independent");

    // 500 random subgroups drawn from abelian F_q-planes: closure rank always even
    Rng rng(2026);
    std::vector<MatrixFq> planes[2] = {{elem(F, 3, 0, 1), elem(F, 3, 0, 2)},
                                       {elem(F, 3, 0, 2), elem(F, 3, 1, 2)}};
    int done = 0;
    while (done < 500) {
        const auto& plane = planes[rng.below(2)];
        int k = 1 + int(rng.below(3));
        std::vector<std::vector<Fe>> rows;
        for (int i = 0; i < k; ++i) {
            MatrixFq M = plane[0].scaled(rng.elem(F)) + plane[1].scaled(rng.elem(F));
            rows.push_back(ctx.flatten(gl3.to_coords(M)));
        }
        Subspace ls = Subspace::from_vectors(ctx.fp(), ctx.flat_dim(), rows);
        if (ls.rank() == 0) continue;
        ElemAbelianSubgroup R = subgroup_from_log_space(ctx, ls);
        int cr = fq_closure(R).rank();
        require(cr % 2 == 0, "closure rank not divisible by d=2");
        require(cr >= R.rank(), "closure smaller than its input");
        ++done;
    }
}

} // namespace

int main() {
    run(1, "Springer identity suite, 4 configurations x 1000 trials", criterion1);
    run(2, "E(1,gl2)(F_p) = p+1 points, one orbit, p in {5,7,11}", criterion2);
    run(3, "E(2,gl3)(F_p): 3 orbits with the class sizes and stabilizers, p in {5,7}", criterion3);
    run(4, "E(1,so3)(F_q) = q+1 points, q in {5,7,25,49}", criterion4);
    run(5, "E(2,u3)(F_p): p+1 points, all U_3-fixed, p in {5,7}", criterion5);
    run(6, "census n=3 r=2 over {5,7,11,13,17}: exact polynomials, max degree 4", criterion6);
    if (std::getenv("ESUB_SLOW"))
        run(7, "E(3,gl4)(F_5): 3,163,056 points; 9 classes refining the 8 geometric orbits",
            criterion7);
    else
        std::cout << "[SKIP] criterion 7: E(3,gl4)(F_5) slow suite (set ESUB_SLOW=1 to run)\n";
    run(8, "r_max consistency for n in {2,3,4}; E(4,gl4)(F_5) is one class", criterion8);
    run(9, "bridge bijection on all 806 points vs the unipotent-pair oracle", criterion9);
    run(10, "F_q-linearity: non-linear example, rank-4 closure, 500 random closures", criterion10);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
