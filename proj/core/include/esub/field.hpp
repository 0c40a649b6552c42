#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace esub {

// Canonical element code: c0 + c1*p + ... + c_{d-1}*p^{d-1}, coefficients
// reduced into [0,p).  One code per element, so equality is integer equality.
using Fe = std::uint16_t;

// F_{p^d} = F_p[x]/(modulus), with full add/mul lookup tables.  Immutable
// after construction; share via const reference or pointer.
class FieldCtx {
public:
    FieldCtx(unsigned p, unsigned d);

    unsigned p() const { return p_; }
    unsigned d() const { return d_; }
    unsigned q() const { return q_; }

    // Low-degree coefficients of the monic modulus x^d + m[d-1]x^{d-1}+...+m[0].
    // Empty for d == 1.
    const std::vector<Fe>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    Fe add(Fe a, Fe b) const { return add_[idx(a, b)]; }
    Fe sub(Fe a, Fe b) const { return add_[idx(a, neg_[b])]; }
    Fe neg(Fe a) const { return neg_[a]; }
    Fe mul(Fe a, Fe b) const { return mul_[idx(a, b)]; }
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, unsigned long long e) const;

    // x -> x^p, the generating field automorphism over F_p.
    Fe frobenius(Fe a) const { return frob_[a]; }

    // Embedding of integers (and of F_p into F_q).
    Fe from_int(long long v) const;

    // Least generator of the multiplicative group under the element encoding.
    Fe primitive_element() const { return primitive_; }

    // The coefficient tuple of an element (length d, constant term first).
    std::vector<Fe> coeffs(Fe a) const;
    Fe from_coeffs(const std::vector<Fe>& c) const;

    bool same(const FieldCtx& other) const {
        return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
    }

    static bool is_prime(unsigned n);

private:
    std::size_t idx(Fe a, Fe b) const { return std::size_t(a) * q_ + b; }
    void find_modulus();
    void build_tables();

    unsigned p_ = 0, d_ = 0, q_ = 0;
    std::vector<Fe> modulus_;
    std::vector<Fe> add_, mul_;
    std::vector<Fe> neg_, inv_, frob_;
    Fe primitive_ = 0;
};

} // namespace esub
