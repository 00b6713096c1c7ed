#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nilorb {

using Rational = boost::rational<std::int64_t>;

// Polynomial in q with exact rational coefficients; coeffs[i] multiplies q^i.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rational c);  // NOLINT: constants convert implicitly
    QPoly(std::int64_t c) : QPoly(Rational(c)) {}  // NOLINT
    static QPoly monomial(Rational c, int degree);
    static QPoly q() { return monomial(1, 1); }

    // Parses sums/products of integers, q, q^k, parenthesized groups and ^k powers.
    static QPoly parse(const std::string& text);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(Rational x) const;
    std::string str() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly pow(int k) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }

    // Long division; remainder returned through rem.
    QPoly divmod(const QPoly& d, QPoly& rem) const;

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

}  // namespace nilorb
