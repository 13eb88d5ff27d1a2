#include "lieid/uelement.hpp"

#include <algorithm>
#include <numeric>

namespace lieid {

UElement UElement::unit(const Rational& c)
{
    UElement u;
    u.add_term({}, c);
    return u;
}

UElement UElement::letter(Symbol s, const Rational& c)
{
    UElement u;
    u.add_term({s}, c);
    return u;
}

UElement UElement::from_lie(const LieElement& x)
{
    UElement u;
    for (const auto& [i, c] : x.coeffs()) u.add_term({static_cast<Symbol>(i)}, c);
    return u;
}

Rational UElement::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void UElement::add_term(const Word& w, const Rational& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o)
{
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o)
{
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

UElement& UElement::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

UElement operator*(const UElement& a, const UElement& b)
{
    UElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

UElement anticommutator(const UElement& x, const UElement& y) { return x * y + y * x; }

namespace {

void add_all_orderings(UElement& out, const Word& letters, const Rational& c)
{
    std::vector<std::size_t> perm(letters.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    std::vector<Word> words;
    do {
        Word w;
        for (std::size_t p : perm) w.push_back(letters[p]);
        words.push_back(std::move(w));
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational share = c / Rational(static_cast<long>(count));
    for (const auto& w : words) out.add_term(w, share);
}

} // namespace

UElement symmetrize(const Poly& p)
{
    UElement u;
    for (const auto& [m, c] : p.terms()) add_all_orderings(u, m, c);
    return u;
}

UElement symmetrize(const UElement& u)
{
    UElement r;
    for (const auto& [w, c] : u.terms()) add_all_orderings(r, w, c);
    return r;
}

Poly commutative_image(const UElement& u)
{
    Poly p;
    for (const auto& [w, c] : u.terms()) p.add_term(w, c);
    return p;
}

UElement pbw_normal_form(const AlgebraContext& ctx, const UElement& u)
{
    UElement done;
    std::map<Word, Rational, DegLex> pending(u.terms().begin(), u.terms().end());
    while (!pending.empty()) {
        // Longest words first, so reordering never revisits a finished word.
        auto it = std::prev(pending.end());
        Word w = it->first;
        Rational c = it->second;
        pending.erase(it);
        if (sgn(c) == 0) continue;
        std::size_t k = 0;
        while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            done.add_term(w, c);
            continue;
        }
        auto push = [&](const Word& v, const Rational& x) {
            auto [jt, inserted] = pending.try_emplace(v, x);
            if (!inserted) jt->second += x;
        };
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        push(swapped, c);
        const LieElement& br = ctx.structure(w[k], w[k + 1]);
        for (const auto& [idx, bc] : br.coeffs()) {
            Word v(w.begin(), w.begin() + static_cast<long>(k));
            v.push_back(static_cast<Symbol>(idx));
            v.insert(v.end(), w.begin() + static_cast<long>(k) + 2, w.end());
            push(v, c * bc);
        }
    }
    return done;
}

std::string to_string(const UElement& u, const SymbolNamer& name)
{
    if (u.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : u.terms()) {
        const bool neg = sgn(c) < 0;
        Rational a = neg ? Rational(-c) : c;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = a == 1 && !w.empty();
        if (!unit) s += a.get_str();
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k > 0 || !unit) s += " ";
            s += name(w[k]);
        }
    }
    return s;
}

} // namespace lieid
