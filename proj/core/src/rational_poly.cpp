#include "esub/rational_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace esub {

RationalPoly::RationalPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const BigRat& c) {
    if (c == 0) return RationalPoly();
    return RationalPoly({c});
}

BigRat RationalPoly::evaluate(const BigInt& x) const {
    BigRat acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * BigRat(x) + coeffs_[i];
    return acc;
}

bool RationalPoly::is_integral() const {
    for (const auto& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigRat& c = coeffs_[i];
        if (c == 0) continue;
        BigRat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        bool unit = (a == 1 && i > 0);
        if (!unit) os << a;
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalPoly lagrange_fit(const std::vector<std::pair<BigInt, BigInt>>& points,
                          int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("lagrange_fit: negative degree bound");
    const std::size_t k = std::size_t(degree_bound) + 1;
    if (points.size() < k) throw std::invalid_argument("lagrange_fit: need degree_bound+1 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("lagrange_fit: duplicate x value");

    // Sum of scaled Lagrange basis polynomials through the first k points.
    std::vector<BigRat> acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        // numerator polynomial prod_{j != i} (x - x_j)
        std::vector<BigRat> num{1};
        BigRat denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<BigRat> next(num.size() + 1, 0);
            for (std::size_t t = 0; t < num.size(); ++t) {
                next[t + 1] += num[t];
                next[t] -= num[t] * BigRat(points[j].first);
            }
            num = std::move(next);
            denom *= BigRat(points[i].first) - BigRat(points[j].first);
        }
        BigRat scale = BigRat(points[i].second) / denom;
        for (std::size_t t = 0; t < num.size(); ++t) acc[t] += num[t] * scale;
    }
    RationalPoly poly{std::move(acc)};

    for (std::size_t i = k; i < points.size(); ++i) {
        if (poly.evaluate(points[i].first) != BigRat(points[i].second)) {
            std::ostringstream os;
            os << "lagrange_fit: held-out point (x=" << points[i].first
               << ", y=" << points[i].second << ") misses the degree-" << degree_bound
               << " interpolant";
            throw std::runtime_error(os.str());
        }
    }
    return poly;
}

} // namespace esub
