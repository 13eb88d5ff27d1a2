#include "doctest.h"

#include "lieid/matrix.hpp"
#include "lieid/unipoly.hpp"

using namespace lieid;

namespace {

Matrix diag(std::initializer_list<long> xs)
{
    Matrix m(xs.size(), xs.size());
    std::size_t i = 0;
    for (long x : xs) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("rank, nullspace and inverse")
{
    Matrix m(3, 3);
    long v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = v[i][j];
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m.apply(ns[0])));
    CHECK_FALSE(inverse(m).has_value());

    Matrix a = diag({2, 3}) + Matrix::identity(2);
    a(0, 1) = Rational(1, 2);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(*inv * a == Matrix::identity(2));
}

TEST_CASE("solve reports inconsistent systems")
{
    Matrix m(2, 1);
    m(0, 0) = 1;
    m(1, 0) = 1;
    std::vector<Rational> ok{3, 3}, bad{3, 4};
    CHECK(solve(m, ok).value()[0] == 3);
    CHECK_FALSE(solve(m, bad).has_value());
}

TEST_CASE("minimal polynomial of small matrices")
{
    CHECK(minimal_polynomial(Matrix::identity(4)) == UniPoly::linear(1));
    // diag(0, 8, 8) -> t (t - 8)
    CHECK(minimal_polynomial(diag({0, 8, 8})) == UniPoly::linear(0) * UniPoly::linear(8));

    // Jordan block keeps the repeated factor.
    Matrix j(2, 2);
    j(0, 0) = 5;
    j(1, 1) = 5;
    j(0, 1) = 1;
    CHECK(minimal_polynomial(j) == UniPoly::linear(5) * UniPoly::linear(5));
}

TEST_CASE("rational roots and non-rational spectra")
{
    UniPoly p = UniPoly::linear(Rational(3, 2)) * UniPoly::linear(-4) * UniPoly::linear(0) * UniPoly::linear(0);
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -4);
    CHECK(roots[1] == 0);
    CHECK(roots[2] == Rational(3, 2));

    // Rotation by 90 degrees scaled: t^2 + 2 has no rational root.
    Matrix r(2, 2);
    r(0, 1) = -2;
    r(1, 0) = 1;
    UniPoly mp = minimal_polynomial(r);
    CHECK(mp.to_string() == "t^2 + 2");
    CHECK_THROWS_AS(rational_roots(mp), NonRationalSpectrum);
}

TEST_CASE("polynomial gcd and evaluation at a matrix")
{
    UniPoly a = UniPoly::linear(1) * UniPoly::linear(2);
    UniPoly b = UniPoly::linear(2) * UniPoly::linear(3);
    CHECK(gcd(a, b) == UniPoly::linear(2));
    CHECK(lcm(a, b).degree() == 3);
    CHECK(a(diag({1, 2})).is_zero());
    CHECK_FALSE(a(diag({1, 3})).is_zero());
}
