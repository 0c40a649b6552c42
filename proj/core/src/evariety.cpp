#include "esub/evariety.hpp"
#include "esub/orbits.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace esub {

namespace {

long long checked_pow(long long base, int e, long long cap) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

} // namespace

PointSet enumerate_naive(const AmbientAlgebra& algebra, int r, const EnumBudget& budget) {
    const FieldCtx& F = algebra.field();
    const int dim = algebra.dim();
    const long long q = F.q();
    if (r < 0 || r > dim) throw std::invalid_argument("enumerate_naive: rank out of range");

    const long long scan_cap = budget.line_budget * (q - 1) + 1;
    if (checked_pow(q, dim, scan_cap) > scan_cap) {
        std::ostringstream os;
        os << "enumerate_naive: nilpotent-line budget " << budget.line_budget
           << " exceeded for q^dim = " << q << "^" << dim << "; use enumerate_seeded";
        throw BudgetError(os.str());
    }

    PointSet out;
    out.algebra = &algebra;
    out.r = r;
    out.method = EnumMethod::naive;

    if (r == 0) {
        out.points.push_back(Subspace::zero(F, dim));
        return out;
    }

    // Projective representatives: first nonzero coordinate equal to 1.
    const unsigned p = F.p();
    std::vector<std::vector<Fe>> lines;
    std::vector<MatrixFq> line_mats;
    for (int lead = 0; lead < dim; ++lead) {
        std::vector<Fe> c(dim, 0);
        c[lead] = F.one();
        for (;;) {
            MatrixFq X = algebra.from_coords(c);
            if (X.pow(p).is_zero()) {
                lines.push_back(c);
                line_mats.push_back(std::move(X));
            }
            int k = lead + 1;
            while (k < dim && ++c[k] == F.q()) c[k++] = 0;
            if (k == dim) break;
        }
    }
    if ((long long)lines.size() > budget.line_budget)
        throw BudgetError("enumerate_naive: nilpotent-line budget exceeded");

    std::unordered_set<std::string> seen;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Fe>> chosen_vecs;

    auto commutes_with_chosen = [&](std::size_t j) {
        for (std::size_t i : chosen)
            if (!bracket(line_mats[i], line_mats[j]).is_zero()) return false;
        return true;
    };

    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        if (int(chosen.size()) == r) {
            Subspace s = Subspace::from_vectors(F, dim, chosen_vecs);
            if (s.rank() == r && seen.insert(s.key()).second) out.points.push_back(std::move(s));
            return;
        }
        for (std::size_t j = start; j < lines.size(); ++j) {
            if (!commutes_with_chosen(j)) continue;
            chosen_vecs.push_back(lines[j]);
            if (Subspace::from_vectors(F, dim, chosen_vecs).rank() == int(chosen_vecs.size())) {
                chosen.push_back(j);
                extend(j + 1);
                chosen.pop_back();
            }
            chosen_vecs.pop_back();
        }
    };
    extend(0);

    std::sort(out.points.begin(), out.points.end());
    return out;
}

std::vector<Subspace> enumerate_u_interior(const AmbientAlgebra& u_algebra, int r) {
    if (u_algebra.family() != Family::u)
        throw std::invalid_argument("enumerate_u_interior: expects the nilradical algebra");
    const FieldCtx& F = u_algebra.field();
    const int m = u_algebra.dim();
    std::vector<Subspace> out;
    if (r == 0) {
        out.push_back(Subspace::zero(F, m));
        return out;
    }
    if (r > m) return out;

    std::vector<int> pivots(r);
    std::vector<std::vector<Fe>> rows(r);
    std::vector<MatrixFq> row_mats(r, MatrixFq(F, u_algebra.n(), u_algebra.n()));

    // Fill row i (entries right of its pivot, skipping later pivot columns),
    // then commutation-check against earlier rows before descending.
    std::function<void(int)> fill_row = [&](int i) {
        if (i == r) {
            out.push_back(Subspace::from_vectors(F, m, rows));
            return;
        }
        std::vector<int> free_cols;
        for (int c = pivots[i] + 1; c < m; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
        std::vector<Fe> vals(free_cols.size(), 0);
        for (;;) {
            rows[i].assign(m, 0);
            rows[i][pivots[i]] = F.one();
            for (std::size_t t = 0; t < free_cols.size(); ++t) rows[i][free_cols[t]] = vals[t];
            row_mats[i] = u_algebra.from_coords(rows[i]);
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (!bracket(row_mats[j], row_mats[i]).is_zero()) { ok = false; break; }
            if (ok) fill_row(i + 1);
            std::size_t k = 0;
            while (k < vals.size() && ++vals[k] == F.q()) vals[k++] = 0;
            if (k == vals.size()) break;
        }
    };

    std::function<void(int, int)> choose_pivots = [&](int idx, int start) {
        if (idx == r) {
            fill_row(0);
            return;
        }
        for (int c = start; c <= m - (r - idx); ++c) {
            pivots[idx] = c;
            choose_pivots(idx + 1, c + 1);
        }
    };
    choose_pivots(0, 0);

    std::sort(out.begin(), out.end());
    return out;
}

PointSet enumerate_seeded(const AmbientAlgebra& algebra, int r, const EnumBudget& budget) {
    const Family fam = algebra.family();
    if (fam == Family::so)
        throw std::invalid_argument("enumerate_seeded: so_n is not in the triangular-seeding regime");
    const FieldCtx& F = algebra.field();
    const int n = algebra.n();

    AmbientAlgebra u_alg(Family::u, n, F);
    std::vector<Subspace> u_seeds = enumerate_u_interior(u_alg, r);

    PointSet out;
    out.algebra = &algebra;
    out.r = r;
    out.method = EnumMethod::seeded;

    if (fam == Family::u) {
        // filter: u-subspaces found are already abelian with X^p = 0; all are points
        out.points = std::move(u_seeds);
        return out;
    }

    // re-express seeds in ambient coordinates, then close under GL_n generators
    std::vector<Subspace> seeds;
    seeds.reserve(u_seeds.size());
    for (const Subspace& s : u_seeds) {
        std::vector<std::vector<Fe>> vecs;
        for (int i = 0; i < s.rank(); ++i)
            vecs.push_back(algebra.to_coords(u_alg.from_coords(s.basis_row(i))));
        seeds.push_back(Subspace::from_vectors(F, algebra.dim(), vecs));
    }

    GroupGenerators gens = gl_generators(n, F);
    std::unordered_set<std::string> visited;
    std::deque<Subspace> frontier;
    for (Subspace& s : seeds)
        if (visited.insert(s.key()).second) frontier.push_back(std::move(s));

    while (!frontier.empty()) {
        Subspace cur = std::move(frontier.front());
        frontier.pop_front();
        out.points.push_back(cur);
        for (std::size_t gi = 0; gi < gens.generators.size(); ++gi) {
            Subspace img = act(gens.generators[gi], gens.inverses[gi], algebra, cur);
            if (visited.insert(img.key()).second) {
                if ((long long)visited.size() > budget.canonical_form_cap)
                    throw BudgetError("enumerate_seeded: canonical-form cap " +
                                      std::to_string(budget.canonical_form_cap) + " exceeded");
                frontier.push_back(std::move(img));
            }
        }
    }

    std::sort(out.points.begin(), out.points.end());
    return out;
}

long long r_max_for_type(const std::string& type) {
    auto binom2 = [](long long k) { return k * (k - 1) / 2; };
    if (type.size() >= 2 && (type[0] == 'A' || type[0] == 'B' || type[0] == 'C' || type[0] == 'D')) {
        long long k = std::stoll(type.substr(1));
        switch (type[0]) {
            case 'A': return (k + 1) * (k + 1) / 4; // floor(((k+1)/2)^2)
            case 'B':
                if (k < 2) throw std::invalid_argument("r_max: unrecognized type " + type);
                return k <= 3 ? 2 * k - 1 : 1 + binom2(k);
            case 'C':
                if (k < 3) throw std::invalid_argument("r_max: unrecognized type " + type);
                return (k + 1) * k / 2;
            case 'D':
                if (k < 4) throw std::invalid_argument("r_max: unrecognized type " + type);
                return binom2(k);
        }
    }
    if (type == "E6") return 16;
    if (type == "E7") return 27;
    if (type == "E8") return 36;
    if (type == "F4") return 9;
    if (type == "G2") return 3;
    if (type.rfind("gl", 0) == 0 || type.rfind("sl", 0) == 0) {
        long long n = std::stoll(type.substr(2));
        return n * n / 4;
    }
    throw std::invalid_argument("r_max: unrecognized type " + type);
}

long long r_max(Family family, int n) {
    auto binom2 = [](long long k) { return k * (k - 1) / 2; };
    switch (family) {
        case Family::gl:
        case Family::sl:
        case Family::u:
            return (long long)n * n / 4; // type A_{n-1}
        case Family::so: {
            if (n == 3) return 1; // so_3 = A_1
            if (n % 2 == 1) {
                long long m = (n - 1) / 2; // B_m
                return m <= 3 ? 2 * m - 1 : 1 + binom2(m);
            }
            long long m = n / 2; // D_m
            if (m < 4) throw std::invalid_argument("r_max: so_" + std::to_string(n) + " unsupported");
            return binom2(m);
        }
    }
    throw std::invalid_argument("r_max: unknown family");
}

long long dim_formula(int r, int n) {
    if (r < 1 || n < 2) throw std::invalid_argument("dim_formula: requires r >= 1, n >= 2");
    return (long long)(n + r - 1) * (n - 1) - (long long)r * r;
}

} // namespace esub
