#include "lieid/poly.hpp"

#include "lieid/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieid {

Poly Poly::constant(const Rational& c)
{
    Poly p;
    p.add_term({}, c);
    return p;
}

Poly Poly::symbol(Symbol s, const Rational& c)
{
    Poly p;
    p.add_term({s}, c);
    return p;
}

Rational Poly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

bool Poly::is_homogeneous(int d) const
{
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.size()) != d) return false;
    return true;
}

void Poly::add_term(Monomial m, const Rational& c)
{
    if (sgn(c) == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

Poly Poly::substitute(const std::function<Poly(Symbol)>& image) const
{
    std::map<Symbol, Poly> cache;
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t = constant(c);
        for (Symbol s : m) {
            auto it = cache.find(s);
            if (it == cache.end()) it = cache.emplace(s, image(s)).first;
            t = t * it->second;
        }
        r += t;
    }
    return r;
}

std::string to_string(const Poly& p, const SymbolNamer& name)
{
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = sgn(c) < 0;
        Rational a = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = a == 1 && !m.empty();
        if (!unit) s += a.get_str();
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k > 0 || !unit) s += "*";
            s += name(m[k]);
        }
    }
    return s;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials))
{
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
        std::sort(monomials_[k].begin(), monomials_[k].end());
        index_.emplace(monomials_[k], k);
    }
}

std::size_t MonomialIndex::index(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial outside the coordinate basis");
    return it->second;
}

std::vector<Rational> MonomialIndex::to_vector(const Poly& p) const
{
    std::vector<Rational> v(size());
    for (const auto& [m, c] : p.terms()) v[index(m)] = c;
    return v;
}

Poly MonomialIndex::from_vector(const std::vector<Rational>& v) const
{
    Poly p;
    for (std::size_t k = 0; k < v.size() && k < size(); ++k) p.add_term(monomials_[k], v[k]);
    return p;
}

MonomialIndex quadratic_monomials(std::size_t count)
{
    std::vector<Monomial> ms;
    ms.reserve(count * (count + 1) / 2);
    for (Symbol i = 0; i < count; ++i)
        for (Symbol j = i; j < count; ++j) ms.push_back({i, j});
    return MonomialIndex(std::move(ms));
}

std::size_t span_rank(const std::vector<Poly>& family)
{
    std::map<Monomial, std::size_t, DegLex> cols;
    for (const auto& p : family)
        for (const auto& [m, c] : p.terms()) cols.try_emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, idx] : cols) idx = k++;
    Matrix rows(family.size(), cols.size());
    for (std::size_t r = 0; r < family.size(); ++r)
        for (const auto& [m, c] : family[r].terms()) rows(r, cols[m]) = c;
    return rank(rows);
}

} // namespace lieid
