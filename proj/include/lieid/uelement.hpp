#pragma once

// Noncommutative polynomials in the generator basis: elements of the free
// algebra, reduced to U(L) on demand by PBW reordering.

#include "lieid/algebra.hpp"
#include "lieid/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieid {

using Word = std::vector<Symbol>;

class UElement {
public:
    using Terms = std::map<Word, Rational, DegLex>;

    UElement() = default;
    static UElement unit(const Rational& c = Rational(1));
    static UElement letter(Symbol s, const Rational& c = Rational(1));
    static UElement from_lie(const LieElement& x);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
    Rational coeff(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement& operator*=(const Rational& s);
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(UElement a, const Rational& s) { return a *= s; }
    friend UElement operator*(const Rational& s, UElement a) { return a *= s; }
    friend UElement operator-(UElement a) { return a *= Rational(-1); }
    friend UElement operator*(const UElement& a, const UElement& b);
    friend bool operator==(const UElement&, const UElement&) = default;

private:
    Terms terms_;
};

/// X Y + Y X
UElement anticommutator(const UElement& x, const UElement& y);

/// Each commutative monomial becomes the average of its orderings.
UElement symmetrize(const Poly& p);
/// Each word becomes the average of its orderings (idempotent).
UElement symmetrize(const UElement& u);

/// Commutative image (forgets the order of letters).
Poly commutative_image(const UElement& u);

/// Rewrite into nondecreasing words using x y = y x + [x,y].
UElement pbw_normal_form(const AlgebraContext& ctx, const UElement& u);

std::string to_string(const UElement& u, const SymbolNamer& name);

/// Image of u under the algebra map sending letter s to image(s).
template <class T, class F>
T evaluate(const UElement& u, F&& image, const T& unit)
{
    std::map<Symbol, T> cache;
    T acc = unit * Rational(0);
    for (const auto& [w, c] : u.terms()) {
        T t = unit * c;
        for (Symbol s : w) {
            auto it = cache.find(s);
            if (it == cache.end()) it = cache.emplace(s, image(s)).first;
            t = t * it->second;
        }
        acc += t;
    }
    return acc;
}

} // namespace lieid
