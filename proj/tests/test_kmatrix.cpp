#include "doctest.h"

#include "lieid/kmatrix.hpp"

#include <random>

using namespace lieid;

namespace {

const Epsilon so = Epsilon::orthogonal();
const Epsilon sp = Epsilon::symplectic();

const CheckRecord* find(const Report& r, const std::string& id, int m = -1)
{
    for (const auto& rec : r.records)
        if (rec.id == id && (m < 0 || rec.params.value("m", -1) == m)) return &rec;
    return nullptr;
}

bool no_failures(const Report& r)
{
    for (const auto& rec : r.records)
        if (rec.status == Status::fail) {
            MESSAGE(rec.id << " failed: " << rec.params.dump() << " " << rec.witness << " " << rec.residual);
            return false;
        }
    return true;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t n)
{
    Matrix b(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) b(r, c) = m(r0 + r, c0 + c);
    return b;
}

/// Random values for the independent block symbols.
std::vector<Rational> random_point(const BlockSymbols& syms, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> v;
    for (std::size_t s = 0; s < syms.count(); ++s) v.push_back(make_rational(num(rng), den(rng)));
    return v;
}

Matrix evaluate(const PolyMatrix& m, const std::vector<Rational>& point)
{
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Poly v = m(r, c).substitute([&](Symbol s) { return Poly::constant(point[s]); });
            out(r, c) = v.is_zero() ? Rational(0) : v.coeff({});
        }
    return out;
}

} // namespace

TEST_CASE("K has one entry per generator")
{
    KMatrix o = build_k1(BlockSymbols(2, so));
    KMatrix s = build_k1(BlockSymbols(2, sp));
    CHECK(distinct_entries(o.entries) == 6);
    CHECK(distinct_entries(s.entries) == 10);
    CHECK(o.d() == o.a().transpose() * Rational(-1));
    CHECK(s.d() == s.a().transpose() * Rational(-1));
    for (int n = 1; n <= 4; ++n)
        for (Epsilon e : {so, sp}) {
            KMatrix k = build_k1(BlockSymbols(n, e));
            const long N = 2L * n;
            CHECK(entry_span_rank(k.entries) == AlgebraContext(n, e).dim());
            CHECK(static_cast<long>(distinct_entries(k.entries)) == N * (N - e.value()) / 2);
        }
}

TEST_CASE("block laws of K^m against a numeric oracle")
{
    // Independent route: random rational matrices with B = -eps B^t, C = -eps C^t,
    // powers computed in plain rational arithmetic.
    std::mt19937 rng(41);
    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            BlockSymbols syms(n, e);
            KMatrix k1 = build_k1(syms);
            const std::size_t un = static_cast<std::size_t>(n);
            for (int trial = 0; trial < 3; ++trial) {
                auto point = random_point(syms, rng);
                Matrix k = evaluate(k1.entries, point);
                CHECK(block(k, 0, un, un).transpose() == block(k, 0, un, un) * Rational(-e.value()));
                Matrix km = k;
                for (int m = 1; m <= 5; ++m) {
                    const Rational s(m % 2 == 0 ? 1 : -1);
                    Matrix A = block(km, 0, 0, un), B = block(km, 0, un, un);
                    Matrix C = block(km, un, 0, un) * Rational(-1), D = block(km, un, un, un);
                    CHECK(B == B.transpose() * (s * e.value()));
                    CHECK(C == C.transpose() * (s * e.value()));
                    CHECK(D == A.transpose() * s);
                    // The symbolic power evaluates to the numeric one.
                    CHECK(evaluate(k_power(k1, m).entries, point) == km);
                    km = km * k;
                }
            }
        }
}

TEST_CASE("proposition examples")
{
    SUBCASE("m = 2: B_2^t = eps B_2")
    {
        for (Epsilon e : {so, sp}) {
            KMatrix k2 = k_power(build_k1(BlockSymbols(2, e)), 2);
            CHECK(k2.b().transpose() == k2.b() * Rational(e.value()));
            CHECK(!k2.b().is_zero());
        }
    }
    SUBCASE("m = 3, so: B_3^t = -B_3")
    {
        KMatrix k3 = k_power(build_k1(BlockSymbols(2, so)), 3);
        CHECK(k3.b().transpose() == k3.b() * Rational(-1));
    }
    SUBCASE("m = 4, sp: B_4^t = -B_4")
    {
        KMatrix k4 = k_power(build_k1(BlockSymbols(2, sp)), 4);
        CHECK(k4.b().transpose() == k4.b() * Rational(-1));
    }
    SUBCASE("m = 2 blocks")
    {
        BlockSymbols syms(2, so);
        KMatrix k1 = build_k1(syms);
        KMatrix k2 = k_power(k1, 2);
        PolyMatrix A = k1.a(), B = k1.b(), C = k1.c();
        CHECK(k2.a() == A * A - B * C);
        CHECK(k2.b() == A * B - B * A.transpose());
        CHECK(k2.c() == C * A - A.transpose() * C);
        CHECK(k1.entries * k2.entries == k2.entries * k1.entries);
    }
    SUBCASE("the displayed D_m = -A_m^t fails for even m")
    {
        KMatrix k2 = k_power(build_k1(BlockSymbols(2, so)), 2);
        CHECK(k2.d() != k2.a().transpose() * Rational(-1));
        CHECK(k2.d() == k2.a().transpose());
    }
}

TEST_CASE("proposition suite")
{
    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            Report r = verify_proposition(n, e, 5);
            CHECK(no_failures(r));
            CHECK(find(r, "kmatrix.lemma-D", 5) != nullptr);
            const auto* even = find(r, "kmatrix.D-sign", 2);
            REQUIRE(even != nullptr);
            CHECK(even->note == "D_m = -A_m^t fails; D_m = A_m^t");
        }
    CHECK_THROWS_AS(verify_proposition(2, so, 1), std::invalid_argument);
}

TEST_CASE("square of K encodes the quadratic identities")
{
    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) CHECK(no_failures(verify_square_identities(AlgebraContext(n, e))));
}

TEST_CASE("structural counts")
{
    for (int n = 1; n <= 4; ++n)
        for (Epsilon e : {so, sp}) {
            Report r = count_check(n, e);
            CHECK(no_failures(r));
        }
    const auto* k2 = find(count_check(1, so), "kmatrix.count-k2");
    REQUIRE(k2 != nullptr);
    CHECK(k2->status == Status::skipped);
    CHECK(find(count_check(2, sp), "kmatrix.count-arithmetic")->note == "1 + 5 = 6");
    CHECK(find(count_check(2, so), "kmatrix.count-arithmetic")->note == "1 + 9 = 10");
}

TEST_CASE("pairing operator (frozen coefficients)")
{
    struct Case {
        int n;
        Epsilon e;
        Rational a, b, c;
    };
    const std::vector<Case> cases{
        {2, so, make_rational(1, 4), make_rational(-3, 64), make_rational(1, 4)},
        {3, so, make_rational(1, 4), make_rational(-5, 256), make_rational(1, 8)},
        {1, sp, make_rational(1, 4), make_rational(3, 256), make_rational(1, 8)},
        {2, sp, make_rational(1, 4), make_rational(5, 576), make_rational(1, 12)},
    };
    for (const auto& cs : cases) {
        AlgebraContext ctx(cs.n, cs.e);
        FockSpace space(cs.n, statistics_for(cs.e));
        OperatorMatrix o = pairing_operator(space, ctx);
        QuadraticRelation rel = find_quadratic(o);
        REQUIRE(rel.found);
        CHECK(!rel.linear_exists);
        CHECK(rel.a == cs.a);
        CHECK(rel.b == cs.b);

        // Direct check of the relation on states, independent of the coordinate solve.
        OperatorMatrix o2 = multiply(o, o);
        const std::size_t N = o.size();
        for (const auto& s : space.states(4))
            for (std::size_t p = 0; p < N; ++p)
                for (std::size_t q = 0; q < N; ++q) {
                    FockOperator entry = o2[p][q] + o[p][q] * rel.a;
                    if (p == q) entry += FockOperator::identity(space, rel.b);
                    CHECK(entry.apply(s).is_zero());
                }

        // O is the transposed realized K scaled by 1/(4(n - eps)).
        OperatorMatrix k = realized_k1(space, ctx);
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = 0; q < N; ++q) CHECK(o[p][q] == k[q][p] * cs.c);
        CHECK(cs.c == make_rational(1, 4 * (cs.n - cs.e.value())));

        CHECK(no_failures(verify_pairing(ctx, 4)));
    }
    Report r = verify_pairing(AlgebraContext(1, so), 4);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].status == Status::skipped);
}

TEST_CASE("an operator with no quadratic relation is rejected")
{
    // N_1 satisfies t(t - 1) = 0; N_1 + N_2 has eigenvalues 0, 1, 2 and needs a cubic.
    FockSpace f(2, Statistics::fermionic);
    FockOperator n1 = FockOperator::creation(f, 0) * FockOperator::annihilation(f, 0);
    FockOperator n2 = FockOperator::creation(f, 1) * FockOperator::annihilation(f, 1);
    OperatorMatrix quad{{n1}};
    QuadraticRelation q = find_quadratic(quad);
    CHECK(q.found);
    CHECK(q.a == -1);
    CHECK(q.b == 0);
    OperatorMatrix cubic{{n1 + n2}};
    CHECK(!find_quadratic(cubic).found);
}
