#include "esub/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace esub {

BigInt gl_order(int n, const FieldCtx& field) {
    BigInt q = field.q(), qn = 1, order = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    BigInt qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

GroupGenerators gl_generators(int n, const FieldCtx& field) {
    if (n < 2) throw std::invalid_argument("gl_generators: n must be >= 2");
    GroupGenerators g;
    g.n = n;
    g.field = &field;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            MatrixFq t = MatrixFq::identity(field, n);
            t(i, j) = field.one();
            g.generators.push_back(std::move(t));
        }
    MatrixFq d = MatrixFq::identity(field, n);
    d(0, 0) = field.primitive_element();
    g.generators.push_back(std::move(d));
    for (const MatrixFq& m : g.generators) g.inverses.push_back(*m.inverse());
    g.group_order = gl_order(n, field);
    return g;
}

GroupGenerators u_generators(int n, const FieldCtx& field) {
    GroupGenerators g;
    g.n = n;
    g.field = &field;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MatrixFq t = MatrixFq::identity(field, n);
            t(i, j) = field.one();
            g.generators.push_back(std::move(t));
        }
    for (const MatrixFq& m : g.generators) g.inverses.push_back(*m.inverse());
    BigInt order = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) order *= field.q();
    g.group_order = order;
    return g;
}

Subspace act(const MatrixFq& g, const MatrixFq& g_inv, const AmbientAlgebra& algebra,
             const Subspace& eps) {
    const FieldCtx& F = algebra.field();
    std::vector<std::vector<Fe>> vecs;
    vecs.reserve(eps.rank());
    for (int i = 0; i < eps.rank(); ++i) {
        MatrixFq X = algebra.from_coords(eps.basis_row(i));
        vecs.push_back(algebra.to_coords(g * X * g_inv));
    }
    return Subspace::from_vectors(F, algebra.dim(), vecs);
}

Subspace act(const MatrixFq& g, const AmbientAlgebra& algebra, const Subspace& eps) {
    auto inv = g.inverse();
    if (!inv) throw std::invalid_argument("act: singular group element");
    return act(g, *inv, algebra, eps);
}

std::vector<OrbitRecord> orbit_partition(const PointSet& points, const GroupGenerators& gens,
                                         const EnumBudget& budget) {
    const AmbientAlgebra& algebra = *points.algebra;
    std::unordered_set<std::string> visited;
    visited.reserve(points.points.size() * 2);
    std::vector<OrbitRecord> records;

    for (const Subspace& start : points.points) {
        if (visited.count(start.key())) continue;
        // points are sorted, so the first unvisited member is the least key
        OrbitRecord rec;
        rec.representative = start;
        std::deque<Subspace> frontier{start};
        visited.insert(start.key());
        long long size = 0;
        while (!frontier.empty()) {
            Subspace cur = std::move(frontier.front());
            frontier.pop_front();
            ++size;
            for (std::size_t gi = 0; gi < gens.generators.size(); ++gi) {
                Subspace img = act(gens.generators[gi], gens.inverses[gi], algebra, cur);
                if (visited.insert(img.key()).second) {
                    if ((long long)visited.size() > budget.canonical_form_cap)
                        throw BudgetError("orbit_partition: canonical-form cap exceeded");
                    frontier.push_back(std::move(img));
                }
            }
        }
        rec.size = size;
        rec.stabilizer_order = stabilizer_order(size, gens.group_order);
        rec.jordan_types = jordan_support(ElemSubalgebra{&algebra, rec.representative});
        records.push_back(std::move(rec));
    }
    if ((long long)visited.size() != (long long)points.points.size())
        throw std::logic_error("orbit_partition: generator closure left the point set");

    std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.representative < b.representative;
    });
    return records;
}

BigInt stabilizer_order(long long orbit_size, const BigInt& group_order) {
    if (orbit_size <= 0 || group_order % orbit_size != 0)
        throw std::logic_error("stabilizer_order: orbit size does not divide the group order");
    return group_order / orbit_size;
}

namespace {

// distinct Jordan types only: multiplicities grow with p, so they cannot
// participate in a cross-prime invariant
std::string jordan_key(const std::vector<Partition>& types) {
    std::set<Partition> distinct(types.begin(), types.end());
    std::ostringstream os;
    for (const Partition& part : distinct) {
        for (int x : part) os << x << ".";
        os << "|";
    }
    return os.str();
}

} // namespace

OrbitCensus census(Family family, int n, int r, const std::vector<long long>& primes,
                   const EnumBudget& budget) {
    if (primes.empty()) throw std::invalid_argument("census: need at least one prime");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] < n) throw std::invalid_argument("census: prime " + std::to_string(primes[i]) +
                                                       " violates p >= n");
        if (!FieldCtx::is_prime(unsigned(primes[i])))
            throw std::invalid_argument("census: " + std::to_string(primes[i]) + " is not prime");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) throw std::invalid_argument("census: duplicate prime");
    }
    if (family == Family::so) throw std::invalid_argument("census: so_n census not supported");

    std::map<long long, std::vector<OrbitRecord>> records_by_prime;
    std::map<long long, long long> point_count_by_prime;
    for (long long p : primes) {
        FieldCtx F(unsigned(p), 1);
        AmbientAlgebra alg(family, n, F);
        PointSet ps = enumerate_seeded(alg, r, budget);
        GroupGenerators gens = family == Family::u ? u_generators(n, F) : gl_generators(n, F);
        std::vector<OrbitRecord> recs = orbit_partition(ps, gens, budget);
        point_count_by_prime[p] = (long long)ps.size();
        records_by_prime[p] = std::move(recs);
    }
    return census_from_records(family, n, r, primes, std::move(records_by_prime),
                               std::move(point_count_by_prime));
}

OrbitCensus census_from_records(Family family, int n, int r,
                                const std::vector<long long>& primes,
                                std::map<long long, std::vector<OrbitRecord>> records_by_prime,
                                std::map<long long, long long> point_count_by_prime) {
    OrbitCensus out;
    out.family = family;
    out.n = n;
    out.r = r;
    out.primes = primes;
    out.records_by_prime = std::move(records_by_prime);
    out.point_count_by_prime = std::move(point_count_by_prime);

    // match orbit families across primes by invariant key (jordan support),
    // positionally by (size, representative) order inside each key group
    std::map<std::string, std::map<long long, std::vector<const OrbitRecord*>>> groups;
    for (const auto& [p, recs] : out.records_by_prime)
        for (const OrbitRecord& rec : recs) groups[jordan_key(rec.jordan_types)][p].push_back(&rec);

    for (const auto& [key, per_prime] : groups) {
        std::size_t count = 0;
        bool first = true;
        for (long long p : primes) {
            auto it = per_prime.find(p);
            std::size_t c = it == per_prime.end() ? 0 : it->second.size();
            if (first) {
                count = c;
                first = false;
            } else if (c != count) {
                out.matched = false;
                out.match_failure = "orbit count differs across primes for Jordan-type key [" + key +
                                    "]; class merging candidate, not guessed";
            }
        }
        if (!out.matched) continue;
        for (std::size_t idx = 0; idx < count; ++idx) {
            OrbitFamily fam;
            fam.r = r;
            fam.jordan_types = per_prime.at(primes.front())[idx]->jordan_types;
            for (long long p : primes) fam.size_by_prime[p] = per_prime.at(p)[idx]->size;
            out.families.push_back(std::move(fam));
        }
    }
    if (!out.matched) {
        out.families.clear();
        return out;
    }

    if (primes.size() >= 2) {
        int bound = std::min<int>(n * n, int(primes.size()) - 1);
        for (OrbitFamily& fam : out.families) {
            std::vector<std::pair<BigInt, BigInt>> pts;
            for (long long p : primes) pts.emplace_back(BigInt(p), BigInt(fam.size_by_prime.at(p)));
            try {
                fam.polynomial = lagrange_fit(pts, bound);
                fam.fitted_degree = fam.polynomial.degree();
            } catch (const std::runtime_error& e) {
                out.matched = false;
                out.match_failure = e.what();
            }
        }
    }

    std::sort(out.families.begin(), out.families.end(), [&](const OrbitFamily& a, const OrbitFamily& b) {
        long long p0 = primes.front();
        if (a.size_by_prime.at(p0) != b.size_by_prime.at(p0))
            return a.size_by_prime.at(p0) < b.size_by_prime.at(p0);
        return jordan_key(a.jordan_types) < jordan_key(b.jordan_types);
    });
    return out;
}

TableReport table_report(const std::vector<OrbitCensus>& censuses) {
    TableReport rep;
    for (const OrbitCensus& c : censuses) {
        auto key = std::make_pair(c.n, c.r);
        if (!c.matched) continue;
        long long p0 = c.primes.front();
        rep.family_counts[key] = int(c.records_by_prime.at(p0).size());
        int max_deg = -1;
        for (const OrbitFamily& fam : c.families) {
            max_deg = std::max(max_deg, fam.fitted_degree);
            rep.polynomials[key].push_back(fam.polynomial.degree() >= 0 ? fam.polynomial.to_string()
                                                                        : std::to_string(fam.size_by_prime.at(p0)));
        }
        rep.max_degrees[key] = max_deg;
        rep.dim_formula_values[key] = dim_formula(c.r, c.n);
    }
    return rep;
}

} // namespace esub
