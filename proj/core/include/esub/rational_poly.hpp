#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace esub {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational-coefficient polynomial, degree-indexed.  Census counts exceed
// 2^20 and interpolation products exceed 64-bit range, hence big integers.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRat> coeffs);

    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly constant(const BigRat& c);

    int degree() const { return int(coeffs_.size()) - 1; } // -1 for zero poly
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    BigRat evaluate(const BigInt& x) const;
    bool is_integral() const; // all coefficients integers

    bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalPoly& o) const { return !(*this == o); }

    // Human-readable, e.g. "p^2 + p + 1".
    std::string to_string(const std::string& var = "p") const;

private:
    std::vector<BigRat> coeffs_; // empty == zero polynomial
};

// Unique interpolating polynomial of degree <= degree_bound through the first
// degree_bound+1 points; remaining points are verified against it.  Throws
// std::invalid_argument on duplicate x or too few points, and
// std::runtime_error when a held-out point misses the polynomial.
RationalPoly lagrange_fit(const std::vector<std::pair<BigInt, BigInt>>& points,
                          int degree_bound);

} // namespace esub
