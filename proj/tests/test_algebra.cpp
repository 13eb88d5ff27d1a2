#include "doctest.h"

#include "lieid/algebra.hpp"

#include <random>

using namespace lieid;

namespace {

const Epsilon so = Epsilon::orthogonal();
const Epsilon sp = Epsilon::symplectic();

bool all_pass(const Report& r)
{
    for (const auto& rec : r.records)
        if (rec.status != Status::pass) {
            MESSAGE(rec.id << " failed: " << rec.witness << " " << rec.residual);
            return false;
        }
    return true;
}

} // namespace

TEST_CASE("metric entries")
{
    AlgebraContext o(2, so), s(2, sp);
    // 1-based (1,3), (3,1), (1,2)
    CHECK(o.g(0, 2) == 1);
    CHECK(o.g(2, 0) == 1);
    CHECK(o.g(0, 1) == 0);
    CHECK(s.g(0, 2) == -1);
    CHECK(s.g(2, 0) == 1);

    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            AlgebraContext ctx(n, e);
            Metric m = metric(ctx);
            CHECK(m.lower * m.upper == Matrix::identity(static_cast<std::size_t>(2 * n)));
            CHECK(m.lower.transpose() == m.lower * Rational(e.value()));
            CHECK(*inverse(invariant_form(ctx)) == m.lower);
        }
}

TEST_CASE("basis dimensions")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(AlgebraContext(n, so).dim() == static_cast<std::size_t>(n * (2 * n - 1)));
        CHECK(AlgebraContext(n, sp).dim() == static_cast<std::size_t>(n * (2 * n + 1)));
    }
}

TEST_CASE("generator matrices")
{
    AlgebraContext o(2, so);
    CHECK(generator_matrix(o, 0, 0).is_zero());

    // sp(4): S_12 = eps e_{3,2} - e_{4,1} (1-based)
    AlgebraContext s(2, sp);
    Matrix expect(4, 4);
    expect(2, 1) = -1;
    expect(3, 0) = -1;
    CHECK(generator_matrix(s, 0, 1) == expect);

    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            AlgebraContext ctx(n, e);
            Matrix k = invariant_form(ctx);
            for (int a = 0; a < 2 * n; ++a)
                for (int b = 0; b < 2 * n; ++b) {
                    Matrix m = generator_matrix(ctx, a, b);
                    CHECK((m.transpose() * k + k * m).is_zero());
                    CHECK(m == generator_matrix(ctx, b, a) * Rational(-e.value()));
                }
        }
    CHECK_THROWS_AS(generator_matrix(o, 4, 0), std::out_of_range);
}

TEST_CASE("commutator basics")
{
    AlgebraContext o(2, so);
    for (std::size_t i = 0; i < o.dim(); ++i) CHECK(commutator(o, o.basis_element(i), o.basis_element(i)).is_zero());

    // [S_12, S_34] against the matrix commutator, so(4).
    MatrixDecomposer dec(o);
    LieElement lhs = commutator(o, o.generator(0, 1), o.generator(2, 3));
    auto oracle = dec.decompose(commutator(generator_matrix(o, 0, 1), generator_matrix(o, 2, 3)));
    REQUIRE(oracle);
    CHECK(lhs == *oracle);

    AlgebraContext s(2, sp);
    CHECK_THROWS_AS(commutator(o, o.generator(0, 1), s.generator(0, 1)), std::invalid_argument);
}

TEST_CASE("block relation [B_ij, C_kl] on random indices, n = 3")
{
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> pick(0, 2);
    for (Epsilon e : {so, sp}) {
        AlgebraContext ctx(3, e);
        const Rational eps(e.value());
        auto A = [&](int i, int j) { return block_element(ctx, Block::A, i, j); };
        auto d = [](int a, int b) { return Rational(a == b ? 1 : 0); };
        for (int t = 0; t < 40; ++t) {
            int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
            LieElement lhs = commutator(ctx, block_element(ctx, Block::B, i, j), block_element(ctx, Block::C, k, l));
            LieElement rhs = -d(j, k) * A(i, l) - d(i, l) * A(j, k) + eps * d(i, k) * A(j, l) + eps * d(j, l) * A(i, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("closure reports")
{
    for (auto [n, e] : {std::pair{2, so}, std::pair{2, sp}, std::pair{1, sp}, std::pair{3, so}, std::pair{3, sp}}) {
        AlgebraContext ctx(n, e);
        CHECK(all_pass(verify_closure(ctx)));
    }
    CHECK(AlgebraContext(1, sp).dim() == 3);
    CHECK(verify_closure(AlgebraContext(2, sp)).records.front().scope == "exhaustive: 100 basis pairs");
    CHECK(verify_jacobi(AlgebraContext(2, so)).status == Status::pass);
    CHECK(verify_jacobi(AlgebraContext(2, sp)).status == Status::pass);
}

TEST_CASE("Killing form closed form against the trace oracle")
{
    AlgebraContext o(2, so);
    CHECK(killing_form(o, o.generator(0, 1), o.generator(0, 1)) == 0);
    CHECK(killing_constant(o) == 4);
    CHECK(killing_constant(AlgebraContext(2, sp)) == 12);

    for (auto [n, e] : {std::pair{2, so}, std::pair{2, sp}}) {
        AlgebraContext ctx(n, e);
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < ctx.dim(); ++i)
            for (std::size_t j = i; j < ctx.dim(); ++j, ++pairs)
                CHECK(killing_form(ctx, ctx.basis_element(i), ctx.basis_element(j)) ==
                      killing_trace(ctx, ctx.basis_element(i), ctx.basis_element(j)));
        CHECK(pairs == (e == so ? 21u : 55u));
    }
    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            if (n == 1 && e == so) continue; // so(2) is abelian
            Report r = verify_killing(AlgebraContext(n, e));
            CHECK(all_pass(r));
        }
    Report r = verify_killing(o);
    CHECK(r.records[1].note.find("oracle constant 4;") != std::string::npos);
}

TEST_CASE("dual basis")
{
    for (int n : {2, 3})
        for (Epsilon e : {so, sp}) {
            AlgebraContext ctx(n, e);
            auto duals = dual_basis(ctx);
            for (std::size_t i = 0; i < ctx.dim(); ++i)
                for (std::size_t j = 0; j < ctx.dim(); ++j)
                    CHECK(killing_form(ctx, ctx.basis_element(i), duals[j]) == (i == j ? 1 : 0));
        }
    AlgebraContext o(2, so);
    CHECK_THROWS_AS(dual_element(o, 1, 0), std::invalid_argument);
    CHECK(dual_element(o, 0, 1) == dual_basis(o)[0]);
}

TEST_CASE("defining-representation Casimir is independent of the basis")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (Epsilon e : {so, sp}) {
        AlgebraContext ctx(2, e);
        const std::size_t D = ctx.dim();
        auto duals = dual_basis(ctx);
        Matrix cas(4, 4);
        for (std::size_t i = 0; i < D; ++i)
            cas += defining_matrix(ctx, ctx.basis_element(i)) * defining_matrix(ctx, duals[i]);

        // Unitriangular change of basis y_k = x_k + sum_{j>k} c_kj x_j.
        std::vector<LieElement> ys;
        for (std::size_t k = 0; k < D; ++k) {
            LieElement y = ctx.basis_element(k);
            for (std::size_t j = k + 1; j < D; ++j) y += Rational(coef(rng)) * ctx.basis_element(j);
            ys.push_back(y);
        }
        Matrix gram(D, D);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) gram(i, j) = killing_form(ctx, ys[i], ys[j]);
        Matrix ginv = *inverse(gram);
        Matrix cas2(4, 4);
        for (std::size_t i = 0; i < D; ++i) {
            LieElement dual = ctx.zero();
            for (std::size_t j = 0; j < D; ++j) dual += ginv(j, i) * ys[j];
            cas2 += defining_matrix(ctx, ys[i]) * defining_matrix(ctx, dual);
        }
        CHECK(cas == cas2);
        // Commutes with the algebra.
        for (std::size_t i = 0; i < D; ++i) CHECK(commutator(cas, defining_matrix(ctx, ctx.basis_element(i))).is_zero());
    }
}

TEST_CASE("LieElement serialization is 1-based")
{
    AlgebraContext o(2, so);
    LieElement x = o.generator(0, 1) * Rational(3, 2) - o.generator(3, 2);
    auto j = to_json(o, x);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == nlohmann::json({1, 2, "3", "2"}));
    CHECK(j[1] == nlohmann::json({3, 4, "1", "1"}));
}
