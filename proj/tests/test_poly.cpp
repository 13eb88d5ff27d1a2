#include "doctest.h"

#include "lieid/blockpoly.hpp"
#include "lieid/sympoly.hpp"
#include "lieid/uelement.hpp"

#include <random>

using namespace lieid;

namespace {

const Epsilon so = Epsilon::orthogonal();
const Epsilon sp = Epsilon::symplectic();

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    Rational coeff() { return make_rational(uniform(-5, 5), uniform(1, 3)); }

    Poly poly(Symbol symbols, int max_terms = 4, int max_degree = 3)
    {
        Poly p;
        const int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            const int d = uniform(0, max_degree);
            for (int k = 0; k < d; ++k) m.push_back(static_cast<Symbol>(uniform(0, static_cast<int>(symbols) - 1)));
            p.add_term(m, coeff());
        }
        return p;
    }

    UElement word_element(Symbol letters, int max_terms = 3, int max_len = 3)
    {
        UElement u;
        const int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Word w;
            const int d = uniform(0, max_len);
            for (int k = 0; k < d; ++k) w.push_back(static_cast<Symbol>(uniform(0, static_cast<int>(letters) - 1)));
            u.add_term(w, coeff());
        }
        return u;
    }
};

std::string plain_name(Symbol s) { return "x" + std::to_string(s); }

} // namespace

TEST_CASE("polynomial ring laws on random polynomials")
{
    Gen g(11);
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = g.poly(5), b = g.poly(5), c = g.poly(5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Poly::constant(1) == a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("polynomial canonical form and printing")
{
    Poly p;
    p.add_term({2, 0}, Rational(3));
    p.add_term({0, 2}, Rational(-3));
    CHECK(p.is_zero());
    p.add_term({1}, Rational(2));
    p.add_term({}, make_rational(1, 2));
    CHECK(p.degree() == 1);
    CHECK(!p.is_homogeneous(1));
    CHECK(to_string(p, plain_name) == "1/2 + 2*x1");
    CHECK(to_string(Poly(), plain_name) == "0");
}

TEST_CASE("substitution is an algebra map")
{
    Gen g(12);
    auto image = [](Symbol s) { return Poly::symbol(s + 1) + Poly::constant(Rational(static_cast<long>(s))); };
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = g.poly(4), b = g.poly(4);
        CHECK((a * b).substitute(image) == a.substitute(image) * b.substitute(image));
        CHECK((a + b).substitute(image) == a.substitute(image) + b.substitute(image));
    }
}

TEST_CASE("monomial index coordinates and span rank")
{
    MonomialIndex q = quadratic_monomials(3);
    CHECK(q.size() == 6);
    Poly p = Poly::symbol(0) * Poly::symbol(2) * Rational(4) - Poly::symbol(1) * Poly::symbol(1);
    CHECK(q.from_vector(q.to_vector(p)) == p);
    CHECK_THROWS_AS(q.to_vector(Poly::symbol(0)), std::out_of_range);

    Poly x = Poly::symbol(0), y = Poly::symbol(1);
    CHECK(span_rank({x, y, x + y, x * Rational(3)}) == 2);
    CHECK(span_rank({x * y, y * x}) == 1);
    CHECK(span_rank({}) == 0);
}

TEST_CASE("block symbols follow the symmetry relations")
{
    BlockSymbols o(2, so), s(2, sp);
    CHECK(o.count() == AlgebraContext(2, so).dim());
    CHECK(s.count() == AlgebraContext(2, sp).dim());
    CHECK(o.symbol(Block::B, 0, 0).is_zero());
    CHECK(o.symbol(Block::B, 1, 0) == -o.symbol(Block::B, 0, 1));
    CHECK(s.symbol(Block::C, 1, 0) == s.symbol(Block::C, 0, 1));
    CHECK(!s.symbol(Block::B, 1, 1).is_zero());
    CHECK(o.matrix(Block::B).transpose() == o.matrix(Block::B) * Rational(-1));
    CHECK(s.matrix(Block::C).transpose() == s.matrix(Block::C));

    Poly b12 = o.symbol(Block::B, 0, 1);
    CHECK(to_string(b12, o.namer()) == "B12");
    auto j = o.to_json(b12 * Rational(2));
    CHECK(j.dump() == R"([["2",[["B",1,2]]]])");
}

TEST_CASE("block dictionary on generator symbols")
{
    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            AlgebraContext ctx(n, e);
            BlockSymbols syms(n, e);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    // A_ij = S_{i+n,j}, C_ij = -eps S_ij
                    auto gen = [&](int a, int b) { return syms.from_generators(ctx, generator_symbol(ctx, a, b)); };
                    CHECK(gen(i + n, j) == syms.symbol(Block::A, i, j));
                    CHECK(gen(i + n, j + n) == syms.symbol(Block::B, i, j));
                    CHECK(gen(i, j) * Rational(-e.value()) == syms.symbol(Block::C, i, j));
                    CHECK(gen(i, j + n) == syms.symbol(Block::A, j, i) * Rational(-e.value()));
                }
        }
}

TEST_CASE("poly matrix transpose of products")
{
    Gen g(13);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix x(3, 3), y(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                x(r, c) = g.poly(4, 2, 1);
                y(r, c) = g.poly(4, 2, 1);
            }
        CHECK((x * y).transpose() == y.transpose() * x.transpose());
        CHECK((x * y).trace() == (y * x).trace());
    }
}

TEST_CASE("PBW reordering realizes the bracket")
{
    Gen g(14);
    for (Epsilon e : {so, sp}) {
        AlgebraContext ctx(2, e);
        const auto D = static_cast<int>(ctx.dim());
        for (int trial = 0; trial < 40; ++trial) {
            const auto i = static_cast<std::size_t>(g.uniform(0, D - 1));
            const auto j = static_cast<std::size_t>(g.uniform(0, D - 1));
            UElement x = UElement::letter(static_cast<Symbol>(i)), y = UElement::letter(static_cast<Symbol>(j));
            UElement lhs = pbw_normal_form(ctx, x * y - y * x);
            UElement rhs = UElement::from_lie(ctx.structure(i, j));
            CHECK(lhs == rhs);
        }
        // Normal forms are idempotent and sorted.
        for (int trial = 0; trial < 20; ++trial) {
            UElement u = g.word_element(static_cast<Symbol>(D));
            UElement nf = pbw_normal_form(ctx, u);
            CHECK(pbw_normal_form(ctx, nf) == nf);
            for (const auto& [w, c] : nf.terms()) CHECK(std::is_sorted(w.begin(), w.end()));
        }
    }
}

TEST_CASE("symmetrization")
{
    Gen g(15);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = g.poly(4);
        UElement u = symmetrize(p);
        CHECK(commutative_image(u) == p);
        CHECK(symmetrize(u) == u);
    }
    UElement xy = UElement::letter(0) * UElement::letter(1);
    UElement expected = (UElement::letter(0) * UElement::letter(1) + UElement::letter(1) * UElement::letter(0)) *
                        make_rational(1, 2);
    CHECK(symmetrize(xy) == expected);
    CHECK(anticommutator(UElement::letter(0), UElement::letter(1)) == expected * Rational(2));
}

TEST_CASE("evaluation into the defining representation is multiplicative")
{
    Gen g(16);
    AlgebraContext ctx(2, sp);
    const auto D = static_cast<Symbol>(ctx.dim());
    auto image = [&](Symbol s) { return defining_matrix(ctx, ctx.basis_element(s)); };
    const Matrix unit = Matrix::identity(4);
    for (int trial = 0; trial < 15; ++trial) {
        UElement a = g.word_element(D), b = g.word_element(D);
        CHECK(evaluate(a * b, image, unit) == evaluate(a, image, unit) * evaluate(b, image, unit));
        // The PBW rewrite is compatible with any representation.
        CHECK(evaluate(pbw_normal_form(ctx, a), image, unit) == evaluate(a, image, unit));
    }
}
