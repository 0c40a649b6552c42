#include "esub/field.hpp"

#include <algorithm>
#include <sstream>

namespace esub {

namespace {

constexpr unsigned kMaxQ = 4096; // full tables only; enough for desk scale

// Dense polynomial arithmetic over F_p, digits low-to-high, used only while
// building the tables.
using Poly = std::vector<unsigned>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    std::vector<unsigned> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by monic modulus of degree d = mod.size()
    const std::size_t d = mod.size();
    for (std::size_t i = prod.size(); i-- > d;) {
        unsigned c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            prod[i - d + j] = (prod[i - d + j] + (p - mod[j] % p) * c) % p;
    }
    prod.resize(d);
    return prod;
}

} // namespace

bool FieldCtx::is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

FieldCtx::FieldCtx(unsigned p, unsigned d) : p_(p), d_(d) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p = " + std::to_string(p) + " is not prime");
    if (d < 1) throw std::invalid_argument("FieldCtx: extension degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < d; ++i) q *= p;
    if (q > kMaxQ) throw std::invalid_argument("FieldCtx: q = p^d exceeds supported table size");
    q_ = unsigned(q);
    find_modulus();
    build_tables();
}

// Lexicographically smallest monic irreducible of degree d, ordering the
// coefficient tuple (c0, c1, ..., c_{d-1}) constant term first.  Irreducibility
// by exhaustive trial division with all monic polynomials of degree <= d/2.
void FieldCtx::find_modulus() {
    if (d_ == 1) return; // trivial modulus
    std::vector<unsigned> c(d_, 0);
    auto divisible = [&](const std::vector<unsigned>& f, const std::vector<unsigned>& g) {
        // f monic degree d_, g monic degree e; long division remainder == 0?
        std::vector<unsigned> r(f);
        r.push_back(1); // leading 1 of f
        const std::size_t e = g.size(); // g has degree e, monic; g holds low coeffs
        for (std::size_t i = r.size(); i-- > e;) {
            unsigned lead = r[i];
            if (lead == 0) continue;
            r[i] = 0;
            for (std::size_t j = 0; j < e; ++j)
                r[i - e + j] = (r[i - e + j] + (p_ - g[j]) * lead) % p_;
        }
        return std::all_of(r.begin(), r.begin() + e, [](unsigned x) { return x == 0; });
    };
    auto irreducible = [&](const std::vector<unsigned>& f) {
        for (unsigned e = 1; e <= d_ / 2; ++e) {
            std::vector<unsigned> g(e, 0);
            for (;;) {
                if (divisible(f, g)) return false;
                // next monic poly of degree e (increment low coeffs)
                std::size_t k = 0;
                while (k < e && ++g[k] == p_) g[k++] = 0;
                if (k == e) break;
            }
        }
        return true;
    };
    // tuple order (c0, c1, ..., c_{d-1}) with the constant term most
    // significant, so the highest index varies fastest
    for (;;) {
        if (irreducible(c)) break;
        std::size_t k = d_;
        while (k-- > 0) {
            if (++c[k] < p_) break;
            c[k] = 0;
            if (k == 0) throw std::logic_error("FieldCtx: no irreducible modulus found");
        }
    }
    modulus_.assign(c.begin(), c.end());
}

void FieldCtx::build_tables() {
    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    frob_.resize(q_);

    auto decode = [&](Fe a) {
        Poly c(d_);
        for (unsigned i = 0; i < d_; ++i) { c[i] = a % p_; a = Fe(a / p_); }
        return c;
    };
    auto encode = [&](const Poly& c) {
        unsigned v = 0;
        for (unsigned i = d_; i-- > 0;) v = v * p_ + c[i];
        return Fe(v);
    };
    Poly mod(modulus_.begin(), modulus_.end());
    if (d_ == 1) mod = {0}; // unused

    for (unsigned a = 0; a < q_; ++a) {
        Poly ca = decode(Fe(a));
        Poly cn(d_);
        for (unsigned i = 0; i < d_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = encode(cn);
        for (unsigned b = 0; b < q_; ++b) {
            Poly cb = decode(Fe(b));
            Poly cs(d_);
            for (unsigned i = 0; i < d_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[idx(Fe(a), Fe(b))] = encode(cs);
            if (d_ == 1) {
                mul_[idx(Fe(a), Fe(b))] = Fe(a * b % p_);
            } else {
                mul_[idx(Fe(a), Fe(b))] = encode(poly_mul_mod(ca, cb, mod, p_));
            }
        }
    }
    for (unsigned a = 1; a < q_; ++a) {
        if (inv_[a] != 0) continue;
        for (unsigned b = 1; b < q_; ++b) {
            if (mul_[idx(Fe(a), Fe(b))] == 1) { inv_[a] = Fe(b); inv_[b] = Fe(a); break; }
        }
        if (inv_[a] == 0) throw std::logic_error("FieldCtx: modulus not irreducible");
    }
    for (unsigned a = 0; a < q_; ++a) frob_[a] = pow(Fe(a), p_);

    // least multiplicative generator under the element encoding
    for (unsigned a = 1; a < q_; ++a) {
        unsigned ord = 1;
        Fe x = Fe(a);
        while (x != 1) { x = mul(x, Fe(a)); ++ord; }
        if (ord == q_ - 1) { primitive_ = Fe(a); break; }
    }
}

Fe FieldCtx::inv(Fe a) const {
    if (a == 0) throw std::domain_error("FieldCtx: inverse of zero");
    return inv_[a];
}

Fe FieldCtx::pow(Fe a, unsigned long long e) const {
    Fe r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fe FieldCtx::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return Fe(m);
}

std::vector<Fe> FieldCtx::coeffs(Fe a) const {
    std::vector<Fe> c(d_);
    for (unsigned i = 0; i < d_; ++i) { c[i] = Fe(a % p_); a = Fe(a / p_); }
    return c;
}

Fe FieldCtx::from_coeffs(const std::vector<Fe>& c) const {
    if (c.size() != d_) throw std::invalid_argument("FieldCtx: coefficient tuple has wrong length");
    unsigned v = 0;
    for (unsigned i = d_; i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("FieldCtx: coefficient not reduced");
        v = v * p_ + c[i];
    }
    return Fe(v);
}

std::string FieldCtx::modulus_string() const {
    if (d_ == 1) return "x";
    std::ostringstream os;
    os << "x^" << d_;
    for (unsigned i = d_; i-- > 0;) {
        if (modulus_[i] == 0) continue;
        os << " + " << modulus_[i];
        if (i == 1) os << "*x";
        else if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

} // namespace esub
