#include "lieid/sympoly.hpp"

#include "lieid/unipoly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lieid {

Poly generator_symbol(const AlgebraContext& ctx, int a, int b)
{
    auto c = ctx.canonical(a, b);
    if (!c) return {};
    return Poly::symbol(static_cast<Symbol>(c->index), Rational(c->sign));
}

Poly to_poly(const LieElement& x)
{
    Poly p;
    for (const auto& [i, c] : x.coeffs()) p.add_term({static_cast<Symbol>(i)}, c);
    return p;
}

SymbolNamer generator_namer(const AlgebraContext& ctx)
{
    return [basis = ctx.basis()](Symbol s) {
        const auto [a, b] = basis.at(s);
        return "S" + std::to_string(a + 1) + "_" + std::to_string(b + 1);
    };
}

namespace {

// [x, basis_s]
LieElement bracket_with_symbol(const AlgebraContext& ctx, const LieElement& x, Symbol s)
{
    LieElement r = ctx.zero();
    for (const auto& [i, c] : x.coeffs()) r += c * ctx.structure(i, s);
    return r;
}

} // namespace

Poly adjoint_on_poly(const AlgebraContext& ctx, const LieElement& x, const Poly& p)
{
    std::map<Symbol, Poly> images;
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k > 0 && m[k] == m[k - 1]) continue; // handled with multiplicity below
            const auto mult = static_cast<long>(std::count(m.begin(), m.end(), m[k]));
            auto it = images.find(m[k]);
            if (it == images.end()) it = images.emplace(m[k], to_poly(bracket_with_symbol(ctx, x, m[k]))).first;
            if (it->second.is_zero()) continue;
            Monomial rest = m;
            rest.erase(rest.begin() + static_cast<long>(k));
            Poly other;
            other.add_term(rest, c * Rational(mult));
            r += other * it->second;
        }
    }
    return r;
}

Poly adjoint_on_sym2(const AlgebraContext& ctx, int a, int b, const Poly& p)
{
    return adjoint_on_poly(ctx, ctx.generator(a, b), p);
}

MonomialIndex sym2_basis(const AlgebraContext& ctx) { return quadratic_monomials(ctx.dim()); }

Matrix operator_matrix(const MonomialIndex& basis, const std::function<Poly(const Poly&)>& f)
{
    const std::size_t M = basis.size();
    Matrix m(M, M);
    for (std::size_t k = 0; k < M; ++k) {
        Poly in;
        in.add_term(basis.monomial(k), Rational(1));
        m.set_column(k, basis.to_vector(f(in)));
    }
    return m;
}

Matrix adjoint_matrix_sym2(const AlgebraContext& ctx, const LieElement& x)
{
    return operator_matrix(sym2_basis(ctx), [&](const Poly& p) { return adjoint_on_poly(ctx, x, p); });
}

Poly casimir_apply(const AlgebraContext& ctx, const Poly& p)
{
    const int N = ctx.defining_dim();
    Poly r;
    for (int k = 0; k < N; ++k) {
        const int nu = ctx.partner(k);
        for (int mu = 0; mu < N; ++mu) {
            const int lambda = ctx.partner(mu);
            const Rational w(ctx.g(k, nu) * ctx.g(mu, lambda));
            LieElement outer = ctx.generator(k, lambda);
            LieElement inner = ctx.generator(mu, nu);
            if (outer.is_zero() || inner.is_zero()) continue;
            r += w * adjoint_on_poly(ctx, outer, adjoint_on_poly(ctx, inner, p));
        }
    }
    return r;
}

Poly casimir_apply_dual(const AlgebraContext& ctx, const std::vector<LieElement>& duals, const Poly& p)
{
    Poly r;
    for (std::size_t i = 0; i < ctx.dim(); ++i)
        r += adjoint_on_poly(ctx, ctx.basis_element(i), adjoint_on_poly(ctx, duals[i], p));
    return r;
}

CasimirOperator casimir_on_sym2(const AlgebraContext& ctx, std::size_t cap)
{
    if (ctx.n() == 1 && ctx.eps().is_orthogonal())
        throw std::invalid_argument("so(2) is abelian: the Casimir operator vanishes");
    const std::size_t D = ctx.dim();
    const std::size_t M = D * (D + 1) / 2;
    if (M > cap)
        throw DimensionCapExceeded("dim S^2 = " + std::to_string(M) + " exceeds cap " + std::to_string(cap));
    const MonomialIndex basis = sym2_basis(ctx);
    const auto duals = dual_basis(ctx);
    CasimirOperator c;
    c.raw = operator_matrix(basis, [&](const Poly& p) { return casimir_apply(ctx, p); });
    c.killing_dual = operator_matrix(basis, [&](const Poly& p) { return casimir_apply_dual(ctx, duals, p); });
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < M && !ratio; ++i)
        for (std::size_t j = 0; j < M; ++j)
            if (sgn(c.killing_dual(i, j)) != 0) {
                ratio = c.raw(i, j) / c.killing_dual(i, j);
                break;
            }
    if (!ratio || c.raw != c.killing_dual * *ratio)
        throw std::logic_error("the two Casimir normalizations are not proportional");
    c.ratio = *ratio;
    return c;
}

std::vector<Rational> exact_spectrum(const Matrix& op)
{
    UniPoly mp = minimal_polynomial(op);
    std::vector<Rational> roots = rational_roots(mp);
    if (static_cast<int>(roots.size()) != mp.degree())
        throw std::domain_error("operator is not diagonalizable: minimal polynomial " + mp.to_string());
    return roots;
}

Matrix projector(const Matrix& casimir, const ProjectorSpec& spec)
{
    std::set<Rational> seen(spec.eigenvalues.begin(), spec.eigenvalues.end());
    if (seen.size() != spec.eigenvalues.size()) throw std::invalid_argument("projector: repeated eigenvalue");
    if (!seen.count(spec.target)) throw std::invalid_argument("projector: target is not an eigenvalue");
    const std::size_t M = casimir.rows();
    Matrix p = Matrix::identity(M);
    for (const auto& c : spec.eigenvalues) {
        if (c == spec.target) continue;
        Matrix f = casimir - Matrix::identity(M) * c;
        p = p * f;
        p *= Rational(1) / (spec.target - c);
    }
    return p;
}

std::optional<Matrix> printed_projection_operator(const AlgebraContext& ctx, const Matrix& raw_casimir)
{
    const Rational n(ctx.n()), e(ctx.e());
    const Rational den = (-4 * n) * (4 * n - 16 * e) * (4 * n - 4 * e);
    if (sgn(den) == 0) return std::nullopt;
    const std::size_t M = raw_casimir.rows();
    const Matrix I = Matrix::identity(M);
    const Matrix c = raw_casimir * Rational(1, 2);
    Matrix op = c * (c - I * Rational(8 * (n - 2 * e))) * (c - I * Rational(4 * (2 * n - e)));
    op *= Rational(1) / den;
    return op;
}

Poly tensor_T(const AlgebraContext& ctx, int a, int b)
{
    Poly t;
    for (int l = 0; l < ctx.defining_dim(); ++l) {
        const int m = ctx.partner(l);
        t += Rational(ctx.g_inv(l, m)) * generator_symbol(ctx, a, l) * generator_symbol(ctx, m, b);
    }
    return t;
}

Poly invariant_I2(const AlgebraContext& ctx)
{
    Poly r;
    const int N = ctx.defining_dim();
    for (int a = 0; a < N; ++a)
        for (int c = 0; c < N; ++c) {
            const int b = ctx.partner(a), d = ctx.partner(c);
            r += Rational(ctx.g(a, b) * ctx.g(c, d)) * generator_symbol(ctx, a, d) * generator_symbol(ctx, c, b);
        }
    return r;
}

IdentityTensor identity_components(const AlgebraContext& ctx)
{
    const int N = ctx.defining_dim();
    IdentityTensor t{ctx.n(), {}, {}, invariant_I2(ctx)};
    const Rational shift = make_rational(1, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Poly T = tensor_T(ctx, a, b);
            t.E.push_back(T - Rational(ctx.g(a, b)) * shift * t.I2);
            t.T.push_back(std::move(T));
        }
    return t;
}

Poly invariant_I2_blocks(const BlockSymbols& syms)
{
    const PolyMatrix A = syms.matrix(Block::A), B = syms.matrix(Block::B), C = syms.matrix(Block::C);
    const PolyMatrix At = A.transpose();
    return (A * A - B * C + At * At - C * B).trace();
}

PolyMatrix identity_block_forms(const BlockSymbols& syms)
{
    const std::size_t n = static_cast<std::size_t>(syms.n());
    const Rational e(syms.eps().value());
    const PolyMatrix A = syms.matrix(Block::A), B = syms.matrix(Block::B), C = syms.matrix(Block::C);
    const PolyMatrix At = A.transpose();
    const PolyMatrix shift = PolyMatrix::scalar(n, invariant_I2_blocks(syms) * Rational(1, static_cast<long>(2 * n)));
    PolyMatrix E(2 * n, 2 * n);
    E.set_block(n, 0, A * A - B * C - shift);
    E.set_block(n, n, A * B - B * At);
    E.set_block(0, 0, (At * C - C * A) * e);
    E.set_block(0, n, (At * At - C * B - shift) * e);
    return E;
}

std::vector<UIdentity> symmetrize_to_U(const AlgebraContext& ctx)
{
    const int n = ctx.n();
    const Rational e(ctx.e());
    using UM = std::vector<UElement>;
    auto blockU = [&](Block b) {
        UM m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.push_back(UElement::from_lie(block_element(ctx, b, i, j)));
        return m;
    };
    auto at = [n](const UM& m, int i, int j) -> const UElement& { return m[static_cast<std::size_t>(i * n + j)]; };
    auto transpose = [&](const UM& m) {
        UM t;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.push_back(at(m, j, i));
        return t;
    };
    auto mul = [&](const UM& x, const UM& y) {
        UM r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                UElement s;
                for (int k = 0; k < n; ++k) s += at(x, i, k) * at(y, k, j);
                r.push_back(std::move(s));
            }
        return r;
    };
    auto sub = [&](const UM& x, const UM& y) {
        UM r;
        for (std::size_t k = 0; k < x.size(); ++k) r.push_back(x[k] - y[k]);
        return r;
    };
    const UM A = blockU(Block::A), B = blockU(Block::B), C = blockU(Block::C);
    const UM At = transpose(A);
    const UM f1 = sub(mul(A, B), mul(B, At));
    const UM f2 = sub(mul(C, A), mul(At, C));
    const UM f3a = sub(mul(A, A), mul(B, C));
    const UM f3b = sub(mul(At, At), mul(C, B));

    std::vector<UIdentity> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back({"AB-BA^t", i, j, symmetrize(at(f1, i, j) + e * at(f1, j, i)), Rational(0)});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back({"CA-A^tC", i, j, symmetrize(at(f2, i, j) + e * at(f2, j, i)), Rational(0)});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back({"A^2-BC", i, j, symmetrize(at(f3a, i, j) + at(f3b, j, i)),
                           i == j ? make_rational(1, n) : Rational(0)});
    return out;
}

long target_dimension(int n, Epsilon eps)
{
    const long N = 2L * n;
    return eps.is_orthogonal() ? (N - 1) * (N + 2) / 2 : (N + 1) * (N - 2) / 2;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

nlohmann::json ctx_params(const AlgebraContext& ctx) { return {{"n", ctx.n()}, {"eps", ctx.e()}}; }

std::string tuple_str(std::initializer_list<int> xs)
{
    std::string s = "(";
    for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x + 1);
    return s + ")";
}

std::string join(const std::vector<Rational>& xs)
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.get_str();
    return "{" + s + "}";
}

Poly apply_matrix(const MonomialIndex& basis, const Matrix& m, const Poly& p)
{
    return basis.from_vector(m.apply(basis.to_vector(p)));
}

void fail(CheckRecord& r, std::string witness, std::string residual = {})
{
    if (r.status == Status::fail) return;
    r.status = Status::fail;
    r.witness = std::move(witness);
    r.residual = std::move(residual);
}

// The Casimir eigenvalue of the E components (raw normalization).
std::optional<Rational> e_eigenvalue(const AlgebraContext& ctx, const IdentityTensor& t)
{
    for (const auto& e : t.E) {
        if (e.is_zero()) continue;
        Poly ce = casimir_apply(ctx, e);
        const auto& [m, c] = *e.terms().begin();
        Rational lam = ce.coeff(m) / c;
        if (ce == e * lam) return lam;
        return std::nullopt;
    }
    return std::nullopt;
}

Report skipped(const AlgebraContext& ctx, const std::string& check, const std::string& reason)
{
    Report rep;
    CheckRecord r = make_record(check, check + ".precondition", "dim S^2(L) within cap, algebra not abelian",
                                ctx_params(ctx), true);
    r.status = Status::skipped;
    r.note = reason;
    rep.add(std::move(r));
    return rep;
}

} // namespace

Report verify_projectors(const AlgebraContext& ctx, std::size_t cap)
{
    if (ctx.n() == 1 && ctx.eps().is_orthogonal())
        return skipped(ctx, "projector", "degenerate rank: so(2) is abelian, the Casimir operator vanishes");
    CasimirOperator cas;
    try {
        cas = casimir_on_sym2(ctx, cap);
    } catch (const DimensionCapExceeded& ex) {
        return skipped(ctx, "projector", ex.what());
    }

    Report rep;
    const auto params = ctx_params(ctx);
    const MonomialIndex basis = sym2_basis(ctx);
    const std::size_t D = ctx.dim(), M = basis.size();
    const int N = ctx.defining_dim();
    const Matrix& C = cas.raw;
    const std::string all_gens = "exhaustive: " + std::to_string(D) + " generators";

    {
        CheckRecord r = make_record("projector", "projector.casimir-adjoint",
                                    "sum g_kn g_ml [S_kl,[S_mn,S_ab]] = 8(n-eps) S_ab", params, true, all_gens);
        const Rational expect(8 * (ctx.n() - ctx.e()));
        for (std::size_t i = 0; i < D; ++i) {
            Poly x = Poly::symbol(static_cast<Symbol>(i));
            Poly cx = casimir_apply(ctx, x);
            if (cx != x * expect) fail(r, "basis " + std::to_string(i + 1), to_string(cx, generator_namer(ctx)));
        }
        r.note = "raw eigenvalue " + expect.get_str() + "; Killing-dual normalization: raw = " + cas.ratio.get_str() +
                 " x dual, adjoint eigenvalue " + Rational(expect / cas.ratio).get_str();
        rep.add(std::move(r));
    }

    {
        // [A,[B,CD]] = [A,[B,C]]D + [B,C][A,D] + [A,C][B,D] + C[A,[B,D]], summed with the metric weights.
        CheckRecord r = make_record("projector", "projector.casimir-expansion",
                                    "[A,[B,CD]] = [A,[B,C]]D + [B,C][A,D] + [A,C][B,D] + C[A,[B,D]]", params, true,
                                    "exhaustive: " + std::to_string(M) + " quadratic monomials");
        for (std::size_t k = 0; k < M; ++k) {
            const Monomial& mono = basis.monomial(k);
            const LieElement x = ctx.basis_element(mono[0]), y = ctx.basis_element(mono[1]);
            Poly expanded;
            for (int kk = 0; kk < N; ++kk) {
                const int nu = ctx.partner(kk);
                for (int mu = 0; mu < N; ++mu) {
                    const int la = ctx.partner(mu);
                    const Rational w(ctx.g(kk, nu) * ctx.g(mu, la));
                    const LieElement a = ctx.generator(kk, la), b = ctx.generator(mu, nu);
                    const LieElement bx = commutator(ctx, b, x), by = commutator(ctx, b, y);
                    expanded += w * (to_poly(commutator(ctx, a, bx)) * to_poly(y) + to_poly(bx) * to_poly(commutator(ctx, a, y)) +
                                     to_poly(commutator(ctx, a, x)) * to_poly(by) + to_poly(x) * to_poly(commutator(ctx, a, by)));
                }
            }
            if (basis.to_vector(expanded) != C.column(k))
                fail(r, "monomial " + std::to_string(k + 1));
        }
        rep.add(std::move(r));
    }

    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < D; ++i) ads.push_back(adjoint_matrix_sym2(ctx, ctx.basis_element(i)));

    {
        CheckRecord r = make_record("projector", "projector.casimir-equivariance", "[C, ad(x)] = 0 on S^2(L)", params,
                                    true, all_gens);
        for (std::size_t i = 0; i < D; ++i)
            if (!commutator(C, ads[i]).is_zero()) fail(r, "basis " + std::to_string(i + 1));
        rep.add(std::move(r));
    }

    const Poly I2 = invariant_I2(ctx);
    {
        CheckRecord r = make_record("projector", "projector.casimir-invariant", "C I_2 = 0", params, true);
        if (!is_zero(C.apply(basis.to_vector(I2)))) fail(r, "I_2");
        rep.add(std::move(r));
    }

    std::vector<Rational> spectrum;
    try {
        spectrum = exact_spectrum(C);
    } catch (const std::exception& ex) {
        CheckRecord r = make_record("projector", "projector.spectrum", "minimal polynomial of C splits over Q",
                                    params, false);
        r.residual = ex.what();
        rep.add(std::move(r));
        return rep;
    }
    std::vector<Matrix> projs;
    for (const auto& c : spectrum) projs.push_back(projector(C, {spectrum, c}));
    std::vector<std::size_t> ranks;
    for (const auto& p : projs) ranks.push_back(rank(p));

    {
        const Rational n(ctx.n()), e(ctx.e());
        std::set<Rational> printed{0, 2 * 8 * (n - 2 * e), 2 * 4 * (2 * n - e), 2 * 4 * n};
        std::set<Rational> found(spectrum.begin(), spectrum.end());
        CheckRecord r = make_record("projector", "projector.spectrum",
                                    "spectrum of C on S^2(L) within 2 x {0, 8(n-2eps), 4(2n-eps), 4n}", params,
                                    std::includes(printed.begin(), printed.end(), found.begin(), found.end()),
                                    "exact minimal polynomial of the " + std::to_string(M) + "x" +
                                                          std::to_string(M) + " Casimir matrix");
        std::string note = "raw eigenvalues " + join(spectrum) + " with multiplicities";
        for (std::size_t k = 0; k < spectrum.size(); ++k)
            note += (k ? ", " : " ") + spectrum[k].get_str() + ":" + std::to_string(ranks[k]);
        note += "; the printed factors are the eigenvalues of C/2";
        for (const auto& c : printed)
            if (!found.count(c)) note += "; " + c.get_str() + " absent (empty or coinciding component)";
        r.note = note;
        if (r.status == Status::fail) r.residual = "found " + join(spectrum);
        rep.add(std::move(r));
    }

    {
        Matrix sum(M, M);
        for (const auto& p : projs) sum += p;
        CheckRecord r = make_record("projector", "projector.resolution", "sum_i P_i = 1", params,
                                    sum == Matrix::identity(M));
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("projector", "projector.orthogonality", "P_i P_j = d_ij P_i", params, true,
                                    "all " + std::to_string(projs.size() * projs.size()) + " ordered pairs");
        for (std::size_t i = 0; i < projs.size(); ++i)
            for (std::size_t j = 0; j < projs.size(); ++j) {
                Matrix pp = projs[i] * projs[j];
                if (i == j ? pp != projs[i] : !pp.is_zero())
                    fail(r, "eigenvalues " + spectrum[i].get_str() + "," + spectrum[j].get_str());
            }
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("projector", "projector.eigenspace", "(C - c_i) P_i = 0", params, true);
        for (std::size_t i = 0; i < projs.size(); ++i)
            if (!((C - Matrix::identity(M) * spectrum[i]) * projs[i]).is_zero())
                fail(r, "eigenvalue " + spectrum[i].get_str());
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("projector", "projector.equivariance", "[P_i, ad(x)] = 0 on S^2(L)", params, true,
                                    all_gens + " x " + std::to_string(projs.size()) + " projectors");
        for (std::size_t i = 0; i < projs.size(); ++i)
            for (std::size_t k = 0; k < D; ++k)
                if (!commutator(projs[i], ads[k]).is_zero())
                    fail(r, "eigenvalue " + spectrum[i].get_str() + ", basis " + std::to_string(k + 1));
        rep.add(std::move(r));
    }

    const IdentityTensor it = identity_components(ctx);
    const bool e_vanishes = std::all_of(it.E.begin(), it.E.end(), [](const Poly& p) { return p.is_zero(); });
    const auto target = e_eigenvalue(ctx, it);
    const auto tpos = target ? std::find(spectrum.begin(), spectrum.end(), *target) : spectrum.end();
    if (tpos == spectrum.end() && !e_vanishes) {
        CheckRecord r = make_record("projector", "projector.target-dimension", "E_ab is a Casimir eigenvector",
                                    params, false);
        r.residual = "no common eigenvalue for the E components";
        rep.add(std::move(r));
        return rep;
    }
    // An empty target component (sp(2)) has the zero projector.
    const Matrix P = e_vanishes ? Matrix(M, M) : projs[static_cast<std::size_t>(tpos - spectrum.begin())];
    const std::size_t target_rank = e_vanishes ? 0 : ranks[static_cast<std::size_t>(tpos - spectrum.begin())];
    {
        const long expect = target_dimension(ctx.n(), ctx.eps());
        CheckRecord r = make_record("projector", "projector.target-dimension",
                                    ctx.eps().is_orthogonal() ? "rank P = (N-1)(N+2)/2" : "rank P = (N+1)(N-2)/2",
                                    params, static_cast<long>(target_rank) == expect);
        r.note = (e_vanishes ? std::string("E vanishes identically, empty target component")
                             : "target eigenvalue (raw) " + target->get_str() +
                                   " = 8n: " + (*target == 8 * ctx.n() ? "yes" : "no")) +
                 "; rank " + std::to_string(target_rank) + ", expected " + std::to_string(expect);
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("projector", "projector.E-image", "P E_ab = E_ab and span{E_ab} = image P",
                                    params, true, "all (2n)^2 components");
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (apply_matrix(basis, P, it.e(a, b)) != it.e(a, b)) fail(r, tuple_str({a, b}));
        if (span_rank(it.E) != target_rank) fail(r, "span rank " + std::to_string(span_rank(it.E)));
        rep.add(std::move(r));
    }

    const Rational scale = Rational(1) / Rational(2 * ctx.n() - 2 * ctx.e());
    const Rational e(ctx.e());
    auto closed_form = [&](int a, int b, int c, int d) {
        return scale * (Rational(ctx.g(a, c)) * it.e(b, d) + Rational(ctx.g(b, d)) * it.e(a, c) -
                        e * Rational(ctx.g(a, d)) * it.e(b, c) - e * Rational(ctx.g(b, c)) * it.e(a, d));
    };
    const std::string quads = "exhaustive: " + std::to_string(N * N * N * N) + " index quadruples";
    const std::string cf = "(1/(2n-2eps)) [g_ac E_bd + g_bd E_ac - eps g_ad E_bc - eps g_bc E_ad]";
    {
        CheckRecord r = make_record("projector", "projector.closed-form", "P(S_ab S_cd) = -" + cf, params, true, quads);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                for (int c = 0; c < N; ++c)
                    for (int d = 0; d < N; ++d) {
                        Poly img = apply_matrix(basis, P, generator_symbol(ctx, a, b) * generator_symbol(ctx, c, d));
                        Poly diff = img + closed_form(a, b, c, d);
                        if (!diff.is_zero()) fail(r, tuple_str({a, b, c, d}), to_string(diff, generator_namer(ctx)));
                    }
        r.note = "the normalized projector (identity on its eigenspace) gives the negative of the printed closed form";
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("projector", "projector.printed-operator",
                                    "C'(C'-8(n-2eps))(C'-4(2n-eps)) / ((-4n)(4n-16eps)(4n-4eps)) (S_ab S_cd) = " + cf +
                                        ", C' = C/2",
                                    params, true, quads);
        auto op = printed_projection_operator(ctx, C);
        if (!op) {
            r.status = Status::skipped;
            r.note = "denominator (-4n)(4n-16eps)(4n-4eps) vanishes";
        } else {
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    for (int c = 0; c < N; ++c)
                        for (int d = 0; d < N; ++d) {
                            Poly img = apply_matrix(basis, *op, generator_symbol(ctx, a, b) * generator_symbol(ctx, c, d));
                            Poly diff = img - closed_form(a, b, c, d);
                            if (!diff.is_zero())
                                fail(r, tuple_str({a, b, c, d}), to_string(diff, generator_namer(ctx)));
                        }
            r.note = "printed operator = -P (three factors in the printed denominator)";
            if (*op != P * Rational(-1)) fail(r, "printed operator != -P");
        }
        rep.add(std::move(r));
    }
    {
        const auto zpos = std::find(spectrum.begin(), spectrum.end(), Rational(0));
        CheckRecord r = make_record("projector", "projector.trivial-image", "P_0(S_ab S_cd) is invariant; ~ I_2 if rank 1",
                                    params, zpos != spectrum.end(), quads);
        if (zpos != spectrum.end()) {
            const std::size_t zi = static_cast<std::size_t>(zpos - spectrum.begin());
            r.note = "0-eigenspace rank " + std::to_string(ranks[zi]);
            if (ranks[zi] > 1) r.note += " (a second quadratic invariant besides I_2)";
            const auto i2v = basis.to_vector(I2);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    for (int c = 0; c < N; ++c)
                        for (int d = 0; d < N; ++d) {
                            auto v = projs[zi].apply(basis.to_vector(generator_symbol(ctx, a, b) * generator_symbol(ctx, c, d)));
                            for (const auto& ad : ads)
                                if (!is_zero(ad.apply(v))) fail(r, tuple_str({a, b, c, d}), "not invariant");
                            if (ranks[zi] == 1 && rank(from_columns({v, i2v}, M)) > 1)
                                fail(r, tuple_str({a, b, c, d}), "not a multiple of I_2");
                        }
        }
        rep.add(std::move(r));
    }
    return rep;
}

Report verify_identities(const AlgebraContext& ctx, std::size_t cap)
{
    (void)cap;
    Report rep;
    const auto params = ctx_params(ctx);
    if (ctx.n() == 1 && ctx.eps().is_orthogonal())
        return skipped(ctx, "identities", "degenerate rank: so(2) is abelian");
    const int N = ctx.defining_dim();
    const std::size_t D = ctx.dim();
    const Rational e(ctx.e());
    const IdentityTensor it = identity_components(ctx);
    const BlockSymbols syms(ctx.n(), ctx.eps());
    const auto namer = generator_namer(ctx);
    const std::string comps = "all " + std::to_string(N * N) + " components";

    {
        CheckRecord r = make_record("identities", "identities.I2-invariant", "ad(x) I_2 = 0", params, true,
                                    "exhaustive: " + std::to_string(D) + " generators");
        for (std::size_t i = 0; i < D; ++i) {
            Poly v = adjoint_on_poly(ctx, ctx.basis_element(i), it.I2);
            if (!v.is_zero()) fail(r, "basis " + std::to_string(i + 1), to_string(v, namer));
        }
        rep.add(std::move(r));
    }
    {
        Poly lhs = syms.from_generators(ctx, it.I2);
        Poly rhs = invariant_I2_blocks(syms);
        CheckRecord r = make_record("identities", "identities.I2-blocks", "I_2 = tr(A^2 - BC + (A^t)^2 - CB)", params,
                                    lhs == rhs);
        if (lhs != rhs) r.residual = to_string(lhs - rhs, syms.namer());
        rep.add(std::move(r));
    }
    {
        Poly tr;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) tr += Rational(ctx.g_inv(b, a)) * it.t(a, b);
        std::optional<Rational> factor;
        if (!it.I2.is_zero()) {
            const auto& [m, c] = *it.I2.terms().begin();
            factor = tr.coeff(m) / c;
            if (tr != it.I2 * *factor) factor.reset();
        }
        CheckRecord r = make_record("identities", "identities.T-trace", "g^ba T_ab = I_2", params,
                                    factor.has_value() && *factor == 1);
        r.note = factor ? "factor " + factor->get_str() : "not proportional";
        rep.add(std::move(r));
    }
    {
        Poly tr;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) tr += Rational(ctx.g_inv(b, a)) * it.e(a, b);
        CheckRecord r = make_record("identities", "identities.E-trace", "g^ba E_ab = 0", params, tr.is_zero());
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("identities", "identities.E-symmetry", "E_ab = eps E_ba", params, true, comps);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (it.e(a, b) != e * it.e(b, a)) fail(r, tuple_str({a, b}));
        rep.add(std::move(r));
    }
    {
        auto lam = e_eigenvalue(ctx, it);
        CheckRecord r = make_record("identities", "identities.E-eigen", "C E_ab = c E_ab, C T_ab = c T_ab when g_ab = 0",
                                    params, true, comps);
        const bool vanishes = std::all_of(it.E.begin(), it.E.end(), [](const Poly& p) { return p.is_zero(); });
        if (!lam && !vanishes) fail(r, "E", "no common eigenvalue");
        if (vanishes) r.note = "E vanishes identically";
        if (lam) {
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    if (casimir_apply(ctx, it.e(a, b)) != it.e(a, b) * *lam) fail(r, "E" + tuple_str({a, b}));
                    if (ctx.g(a, b) == 0 && casimir_apply(ctx, it.t(a, b)) != it.t(a, b) * *lam)
                        fail(r, "T" + tuple_str({a, b}));
                }
            r.note = "raw eigenvalue " + lam->get_str();
        }
        rep.add(std::move(r));
    }
    {
        const PolyMatrix forms = identity_block_forms(syms);
        CheckRecord r = make_record("identities", "identities.block-forms",
                                    "E_{i+n,j} = (A^2-BC)_ij - d_ij I_2/2n, E_{i+n,j+n} = (AB-BA^t)_ij, E_ij = "
                                    "eps(A^tC-CA)_ij, E_{i,j+n} = eps((A^t)^2-CB)_ij - eps d_ij I_2/2n",
                                    params, true, comps);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                Poly diff = syms.from_generators(ctx, it.e(a, b)) - forms(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                if (!diff.is_zero()) fail(r, tuple_str({a, b}), to_string(diff, syms.namer()));
            }
        rep.add(std::move(r));
    }
    {
        const long expect = target_dimension(ctx.n(), ctx.eps());
        const std::size_t got = span_rank(it.E);
        CheckRecord r = make_record("identities", "identities.E-count",
                                    ctx.eps().is_orthogonal() ? "#independent E_ab = (N-1)(N+2)/2"
                                                              : "#independent E_ab = (N+1)(N-2)/2",
                                    params, static_cast<long>(got) == expect);
        r.note = "span rank " + std::to_string(got);
        rep.add(std::move(r));
    }

    const auto uids = symmetrize_to_U(ctx);
    const UElement symI2 = symmetrize(it.I2);
    {
        CheckRecord r = make_record("identities", "identities.u-form",
                                    "U(L) forms are symmetrizations of 2 E_{i+n,j+n}, -2 eps E_ij, 2 E_{i+n,j}",
                                    params, true, "all " + std::to_string(uids.size()) + " components");
        const int n = ctx.n();
        for (const auto& u : uids) {
            Poly expect;
            if (u.family == "AB-BA^t") expect = it.e(u.i + n, u.j + n) * Rational(2);
            else if (u.family == "CA-A^tC") expect = it.e(u.i, u.j) * Rational(-2 * ctx.e());
            else expect = it.e(u.i + n, u.j) * Rational(2);
            Poly got = commutative_image(u.lhs) - it.I2 * u.i2_coeff;
            if (got != expect) fail(r, u.family + tuple_str({u.i, u.j}), to_string(got - expect, namer));
            if (symmetrize(u.lhs) != u.lhs) fail(r, u.family + tuple_str({u.i, u.j}), "not symmetric");
        }
        rep.add(std::move(r));
    }
    {
        // Negative control: the defining representation is not annihilated.
        std::vector<Matrix> images;
        for (std::size_t i = 0; i < D; ++i) images.push_back(defining_matrix(ctx, ctx.basis_element(i)));
        const Matrix unit = Matrix::identity(static_cast<std::size_t>(N));
        std::size_t nonzero = 0;
        for (const auto& u : uids) {
            Matrix v = evaluate<Matrix>(u.lhs - u.i2_coeff * symI2, [&](Symbol s) { return images[s]; }, unit);
            if (!v.is_zero()) ++nonzero;
        }
        CheckRecord r = make_record("identities", "identities.defining-control",
                                    "U(L) identities are nonzero in the defining representation", params, nonzero > 0,
                                    "all " + std::to_string(uids.size()) + " components");
        r.note = std::to_string(nonzero) + " of " + std::to_string(uids.size()) + " components nonzero";
        if (span_rank(it.E) == 0) {
            r.status = Status::skipped;
            r.note += "; E vanishes in S(L), so the identities are trivial and no control exists";
        }
        rep.add(std::move(r));
    }
    return rep;
}

} // namespace lieid
