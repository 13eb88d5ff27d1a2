#pragma once

// Sparse commutative polynomials over Q in integer-labelled symbols.

#include "lieid/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lieid {

using Symbol = std::uint32_t;
/// Symbols with multiplicity, kept sorted.
using Monomial = std::vector<Symbol>;

/// Degree first, then lexicographic on the sorted symbol list.
struct DegLex {
    bool operator()(const Monomial& x, const Monomial& y) const
    {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational, DegLex>;

    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly symbol(Symbol s, const Rational& c = Rational(1));

    const Terms& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;

    /// Adds c * m; `m` need not be sorted.
    void add_term(Monomial m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Replace every symbol by a polynomial.
    Poly substitute(const std::function<Poly(Symbol)>& image) const;

private:
    Terms terms_;
};

using SymbolNamer = std::function<std::string(Symbol)>;

std::string to_string(const Poly& p, const SymbolNamer& name);

/// Coordinates of polynomials in a fixed monomial list.
class MonomialIndex {
public:
    MonomialIndex() = default;
    explicit MonomialIndex(std::vector<Monomial> monomials);

    std::size_t size() const { return monomials_.size(); }
    const Monomial& monomial(std::size_t k) const { return monomials_[k]; }
    /// Throws std::out_of_range when `m` is not in the list.
    std::size_t index(const Monomial& m) const;

    /// Throws std::out_of_range when p has a monomial outside the list.
    std::vector<Rational> to_vector(const Poly& p) const;
    Poly from_vector(const std::vector<Rational>& v) const;

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

/// All degree-2 monomials x_i x_j, i <= j < count, lexicographic.
MonomialIndex quadratic_monomials(std::size_t count);

/// Rank of the linear span of a family of polynomials.
std::size_t span_rank(const std::vector<Poly>& family);

} // namespace lieid
