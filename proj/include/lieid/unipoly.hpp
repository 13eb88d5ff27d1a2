#pragma once

#include "lieid/matrix.hpp"
#include "lieid/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lieid {

/// Univariate polynomial over Q; coeffs[k] multiplies t^k, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t k);
    /// t - root
    static UniPoly linear(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const;

    UniPoly monic() const;
    Rational operator()(const Rational& x) const;
    Matrix operator()(const Matrix& m) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);

class NonRationalSpectrum : public std::runtime_error {
public:
    NonRationalSpectrum(UniPoly residual_factor);
    const UniPoly& factor() const { return factor_; }

private:
    UniPoly factor_;
};

/// Distinct rational roots, ascending. Throws NonRationalSpectrum when an
/// irreducible factor of degree > 1 remains after extracting them.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Exact minimal polynomial of a square matrix: product of the local minimal
/// polynomials of the standard basis vectors, built incrementally.
UniPoly minimal_polynomial(const Matrix& op);

} // namespace lieid
