#include "doctest.h"

#include "lieid/sympoly.hpp"
#include "lieid/unipoly.hpp"

#include <random>
#include <set>

using namespace lieid;

namespace {

const Epsilon so = Epsilon::orthogonal();
const Epsilon sp = Epsilon::symplectic();

bool all_pass_or_skipped(const Report& r)
{
    for (const auto& rec : r.records)
        if (rec.status == Status::fail) {
            MESSAGE(rec.id << " failed: " << rec.witness << " " << rec.residual);
            return false;
        }
    return true;
}

std::size_t eigenspace_rank(const Matrix& op, const Rational& lambda)
{
    return op.rows() - rank(op - Matrix::identity(op.rows()) * lambda);
}

} // namespace

TEST_CASE("adjoint action on S^2 is a derivation")
{
    std::mt19937 rng(21);
    for (Epsilon e : {so, sp}) {
        AlgebraContext ctx(2, e);
        const int D = static_cast<int>(ctx.dim());
        std::uniform_int_distribution<int> pick(0, D - 1);
        for (int trial = 0; trial < 25; ++trial) {
            const auto [a, b] = ctx.basis()[static_cast<std::size_t>(pick(rng))];
            const auto [c, d] = ctx.basis()[static_cast<std::size_t>(pick(rng))];
            const auto [p, q] = ctx.basis()[static_cast<std::size_t>(pick(rng))];
            Poly x = generator_symbol(ctx, c, d), y = generator_symbol(ctx, p, q);
            LieElement g = ctx.generator(a, b);
            Poly lhs = adjoint_on_poly(ctx, g, x * y);
            Poly rhs = adjoint_on_poly(ctx, g, x) * y + x * adjoint_on_poly(ctx, g, y);
            CHECK(lhs == rhs);
            CHECK(adjoint_on_poly(ctx, g, x) == to_poly(commutator(ctx, g, ctx.generator(c, d))));
        }
    }
}

TEST_CASE("adjoint representation on S^2 is a homomorphism")
{
    AlgebraContext ctx(2, sp);
    for (std::size_t i = 0; i < ctx.dim(); ++i)
        for (std::size_t j = i; j < ctx.dim(); ++j) {
            Matrix x = adjoint_matrix_sym2(ctx, ctx.basis_element(i));
            Matrix y = adjoint_matrix_sym2(ctx, ctx.basis_element(j));
            CHECK(commutator(x, y) == adjoint_matrix_sym2(ctx, ctx.structure(i, j)));
        }
}

TEST_CASE("Casimir spectra on S^2 (frozen)")
{
    struct Case {
        int n;
        Epsilon e;
        std::vector<std::pair<int, std::size_t>> spectrum; // raw eigenvalue, multiplicity
    };
    const std::vector<Case> cases{
        {2, so, {{0, 2}, {16, 9}, {24, 10}}},
        {3, so, {{0, 1}, {16, 15}, {24, 20}, {40, 84}}},
        {1, sp, {{0, 1}, {48, 5}}},
        {2, sp, {{0, 1}, {16, 5}, {40, 14}, {64, 35}}},
    };
    for (const auto& c : cases) {
        AlgebraContext ctx(c.n, c.e);
        CasimirOperator cas = casimir_on_sym2(ctx, 10000);
        std::vector<Rational> spec = exact_spectrum(cas.raw);
        REQUIRE(spec.size() == c.spectrum.size());
        std::size_t total = 0;
        const int n = c.n, eps = c.e.value();
        const std::set<int> allowed{0, 16 * (n - 2 * eps), 8 * (2 * n - eps), 8 * n};
        for (std::size_t k = 0; k < spec.size(); ++k) {
            CHECK(spec[k] == c.spectrum[k].first);
            CHECK(eigenspace_rank(cas.raw, spec[k]) == c.spectrum[k].second);
            CHECK(allowed.count(c.spectrum[k].first) == 1);
            total += c.spectrum[k].second;
        }
        CHECK(total == ctx.dim() * (ctx.dim() + 1) / 2);
        // Adjoint eigenvalue of the raw operator is 8(n - eps); the Killing-dual one is 1.
        CHECK(cas.ratio == 8 * (n - eps));
        CHECK(cas.raw == cas.killing_dual * cas.ratio);
        // Independent route: roots of the minimal polynomial.
        CHECK(rational_roots(minimal_polynomial(cas.raw)) == spec);
    }
}

TEST_CASE("spectral projectors")
{
    for (Epsilon e : {so, sp}) {
        AlgebraContext ctx(2, e);
        CasimirOperator cas = casimir_on_sym2(ctx, 10000);
        auto spec = exact_spectrum(cas.raw);
        Matrix sum(cas.raw.rows(), cas.raw.cols());
        std::vector<Matrix> ps;
        for (const auto& lambda : spec) {
            Matrix p = projector(cas.raw, {spec, lambda});
            CHECK(p * p == p);
            CHECK(cas.raw * p == p * lambda);
            sum += p;
            ps.push_back(p);
        }
        CHECK(sum == Matrix::identity(cas.raw.rows()));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK((ps[i] * ps[j]).is_zero());

        const Rational target(8 * 2);
        CHECK(rank(projector(cas.raw, {spec, target})) == static_cast<std::size_t>(target_dimension(2, e)));
        CHECK_THROWS_AS(projector(cas.raw, {spec, Rational(7)}), std::invalid_argument);
    }
    CHECK(target_dimension(2, so) == 9);
    CHECK(target_dimension(2, sp) == 5);
    CHECK(target_dimension(3, so) == 20);
    CHECK(target_dimension(3, sp) == 14);
}

TEST_CASE("Casimir guards and the printed operator")
{
    CHECK_THROWS_AS(casimir_on_sym2(AlgebraContext(4, so), 100), DimensionCapExceeded);
    CHECK_THROWS_AS(casimir_on_sym2(AlgebraContext(1, so), 100), std::invalid_argument);
    AlgebraContext o2(2, so);
    CHECK(printed_projection_operator(o2, casimir_on_sym2(o2, 10000).raw).has_value());
}

TEST_CASE("quadratic tensor and invariant")
{
    for (int n : {1, 2, 3})
        for (Epsilon e : {so, sp}) {
            AlgebraContext ctx(n, e);
            IdentityTensor it = identity_components(ctx);
            const int N = 2 * n;
            Poly trace;
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    CHECK(it.e(a, b) == it.t(a, b) - it.I2 * (make_rational(ctx.g(a, b), 2 * n)));
                    CHECK(it.e(a, b) == it.e(b, a) * Rational(e.value()));
                    trace += it.e(a, b) * Rational(ctx.g_inv(b, a));
                }
            CHECK(trace.is_zero());
            for (std::size_t k = 0; k < ctx.dim(); ++k) CHECK(adjoint_on_poly(ctx, ctx.basis_element(k), it.I2).is_zero());
            BlockSymbols syms(n, e);
            CHECK(syms.from_generators(ctx, it.I2) == invariant_I2_blocks(syms));
        }
}

TEST_CASE("E vanishes identically for sp(2) and not in the defining representation")
{
    IdentityTensor it = identity_components(AlgebraContext(1, sp));
    for (const auto& p : it.E) CHECK(p.is_zero());
    IdentityTensor o = identity_components(AlgebraContext(2, so));
    bool any = false;
    for (const auto& p : o.E) any = any || !p.is_zero();
    CHECK(any);
}

TEST_CASE("U(L) forms of the identities")
{
    AlgebraContext ctx(2, so);
    auto ids = symmetrize_to_U(ctx);
    std::set<std::string> families;
    for (const auto& u : ids) {
        families.insert(u.family);
        if (u.family != "A^2-BC") CHECK(u.i2_coeff == 0);
        if (u.family == "A^2-BC") CHECK(u.i2_coeff == (u.i == u.j ? make_rational(1, 2) : Rational(0)));
    }
    CHECK(families == std::set<std::string>{"AB-BA^t", "CA-A^tC", "A^2-BC"});
}

TEST_CASE("projector and identity suites")
{
    for (int n : {1, 2})
        for (Epsilon e : {so, sp}) {
            AlgebraContext ctx(n, e);
            CHECK(all_pass_or_skipped(verify_projectors(ctx, 10000)));
            CHECK(all_pass_or_skipped(verify_identities(ctx, 10000)));
        }
    Report skipped = verify_projectors(AlgebraContext(1, so), 10000);
    REQUIRE(skipped.records.size() == 1);
    CHECK(skipped.records[0].status == Status::skipped);
    Report capped = verify_projectors(AlgebraContext(2, so), 5);
    REQUIRE(capped.records.size() == 1);
    CHECK(capped.records[0].status == Status::skipped);
}
