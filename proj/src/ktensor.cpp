#include "lieid/ktensor.hpp"

#include "lieid/sympoly.hpp"

namespace lieid {

KGenerators<FockOperator> fock_generators(const FockSpace& space)
{
    KGenerators<FockOperator> g{space.modes(), space.eps(), FockOperator::identity(space), {}, {}, {}};
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            g.mixed.push_back(hnn_generator(space, HnnKind::mixed, a, b));
            g.upper.push_back(hnn_generator(space, HnnKind::raising, a, b));
            g.lower.push_back(hnn_generator(space, HnnKind::lowering, a, b));
        }
    return g;
}

KGenerators<UElement> word_generators(const AlgebraContext& ctx)
{
    KGenerators<UElement> g{ctx.n(), ctx.e(), UElement::unit(), {}, {}, {}};
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            g.mixed.push_back(UElement::from_lie(block_element(ctx, Block::A, a, b)));
            g.upper.push_back(UElement::from_lie(block_element(ctx, Block::B, a, b)));
            g.lower.push_back(-UElement::from_lie(block_element(ctx, Block::C, a, b)));
        }
    return g;
}

namespace {

nlohmann::json ctx_params(const AlgebraContext& ctx) { return {{"n", ctx.n()}, {"eps", ctx.e()}}; }

std::string tuple_str(std::initializer_list<int> xs)
{
    std::string s = "(";
    for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x + 1);
    return s + ")";
}

void record_equal(CheckRecord& r, const EqualityResult& eq, const std::string& where)
{
    if (r.status == Status::fail || eq.equal) return;
    r.status = Status::fail;
    r.witness = where + (eq.witness.empty() ? "" : " on " + eq.witness);
    r.residual = eq.residual;
}

void record_words(CheckRecord& r, const UElement& x, const UElement& y, const std::string& where)
{
    if (r.status == Status::fail || x == y) return;
    r.status = Status::fail;
    r.witness = where;
    r.residual = "word difference with " + std::to_string((x - y).terms().size()) + " terms";
}

std::string family_scope(const FockSpace& space, const std::vector<OccState>& family, int d_check)
{
    if (space.stats() == Statistics::fermionic) return "all " + std::to_string(family.size()) + " states";
    return std::to_string(family.size()) + " states of degree <= " + std::to_string(d_check);
}

// Second-order forms written directly in the block words (A, B, C as U elements).
struct SecondOrder {
    std::vector<UElement> mixed, upper, lower; // 1/2 sum_k (...)
};

SecondOrder second_order_forms(const AlgebraContext& ctx)
{
    const int n = ctx.n();
    auto X = [&](Block b, int i, int j) { return UElement::from_lie(block_element(ctx, b, i, j)); };
    SecondOrder s;
    const Rational half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            UElement m, u, l;
            for (int k = 0; k < n; ++k) {
                m += anticommutator(X(Block::A, i, k), X(Block::A, k, j)) -
                     anticommutator(X(Block::B, i, k), X(Block::C, k, j));
                u += anticommutator(X(Block::A, i, k), X(Block::B, k, j)) -
                     anticommutator(X(Block::B, i, k), X(Block::A, j, k));
                l += anticommutator(X(Block::C, i, k), X(Block::A, k, j)) -
                     anticommutator(X(Block::A, k, i), X(Block::C, k, j));
            }
            s.mixed.push_back(half * m);
            s.upper.push_back(half * u);
            s.lower.push_back(half * l);
        }
    return s;
}

FockOperator realize_word(const UElement& u, const std::vector<FockOperator>& images, const FockOperator& unit)
{
    return evaluate<FockOperator>(u, [&](Symbol s) { return images[s]; }, unit);
}

} // namespace

CheckRecord verify_symmetry(const KTensorSet<FockOperator>& k, const std::vector<OccState>& family,
                            const nlohmann::json& params)
{
    const int eps = params.value("eps", 1);
    const int s = k.m % 2 == 0 ? eps : -eps;
    nlohmann::json p = params;
    p["m"] = k.m;
    CheckRecord r = make_record("hnn-recursion", "hnn-recursion.symmetry",
                                k.m % 2 == 0 ? "^mK^{ab} = eps ^mK^{ba}, ^mK_ab = eps ^mK_ba (m even)"
                                             : "^mK^{ab} = -eps ^mK^{ba}, ^mK_ab = -eps ^mK_ba (m odd)",
                                p, true);
    EqualityResult last;
    int shift = 0;
    for (int a = 0; a < k.n; ++a)
        for (int b = 0; b < k.n; ++b) {
            last = operator_equal(k.k_upper(a, b), Rational(s) * k.k_upper(b, a), family);
            shift = std::max(shift, k.k_upper(a, b).max_grade_shift());
            record_equal(r, last, "upper" + tuple_str({a, b}));
            last = operator_equal(k.k_lower(a, b), Rational(s) * k.k_lower(b, a), family);
            shift = std::max(shift, k.k_lower(a, b).max_grade_shift());
            record_equal(r, last, "lower" + tuple_str({a, b}));
        }
    r.scope = "normal-form comparison; " + std::to_string(family.size()) + " states";
    if (last.max_degree >= 0) r.scope += ", degree <= " + std::to_string(last.max_degree);
    r.scope += ", grade shift " + std::to_string(shift);
    if (k.m % 2 == 1) r.note = "same law as the generators (m = 1)";
    return r;
}

Report verify_recursion(const AlgebraContext& ctx, int m_max, int d_check)
{
    Report rep;
    const FockSpace space(ctx.n(), statistics_for(ctx.eps()));
    const auto family = space.states(d_check);
    const auto params = ctx_params(ctx);
    const int n = ctx.n();
    const auto gens = fock_generators(space);
    const auto seq = k_sequence(gens, std::max(m_max, 2));
    const std::string scope = family_scope(space, family, d_check);

    {
        const auto stepped = k_step(seq[0], gens);
        CheckRecord r = make_record("hnn-recursion", "hnn-recursion.base-step",
                                    "recursion applied to ^0K reproduces ^1K", params, true, scope);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                record_equal(r, operator_equal(stepped.k_mixed(a, b), seq[1].k_mixed(a, b), family), "mixed" + tuple_str({a, b}));
                record_equal(r, operator_equal(stepped.k_upper(a, b), seq[1].k_upper(a, b), family), "upper" + tuple_str({a, b}));
                record_equal(r, operator_equal(stepped.k_lower(a, b), seq[1].k_lower(a, b), family), "lower" + tuple_str({a, b}));
            }
        r.note = r.status == Status::pass ? "proportionality constant 1" : "not reproduced";
        rep.add(std::move(r));
    }

    for (int m = 0; m <= m_max; ++m) rep.add(verify_symmetry(seq[static_cast<std::size_t>(m)], family, params));

    {
        const auto wseq = k_sequence(word_generators(ctx), 2);
        const auto forms = second_order_forms(ctx);
        CheckRecord r = make_record("hnn-recursion", "hnn-recursion.second-order-words",
                                    "^2K^i_j = 1/2 sum_k([A_ik,A_kj]_+ - [B_ik,C_kj]_+), ^2K^{ij} = 1/2 sum_k([A_ik,B_kj]_+ - "
                                    "[B_ik,A_jk]_+), ^2K_ij = 1/2 sum_k([C_ik,A_kj]_+ - [A_ki,C_kj]_+)",
                                    params, true, "identities of words in the free algebra, all index pairs");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto k = static_cast<std::size_t>(i * n + j);
                record_words(r, wseq[2].mixed[k], forms.mixed[k], "mixed" + tuple_str({i, j}));
                record_words(r, wseq[2].upper[k], forms.upper[k], "upper" + tuple_str({i, j}));
                record_words(r, wseq[2].lower[k], forms.lower[k], "lower" + tuple_str({i, j}));
            }
        r.note = "prefactor 1/2 for the upper and lower forms (printed as 2)";
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("hnn-recursion", "hnn-recursion.second-order-scalar", "^2K^a_b = c d_ab", params,
                                    true, scope);
        std::optional<Rational> scalar;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto c = seq[2].k_mixed(a, b).as_scalar();
                if (!c || (a != b && *c != 0) || (a == b && scalar && *c != *scalar)) {
                    r.status = Status::fail;
                    r.witness = tuple_str({a, b});
                } else if (a == b) {
                    scalar = *c;
                }
            }
        if (scalar) {
            const Rational fermi(2 * n - 1, 4), bose(-(2 * n + 1), 4);
            r.note = "c = " + scalar->get_str() + (ctx.eps().is_orthogonal() ? " ((2n-1)/4 = " + fermi.get_str() + ")"
                                                                                : " (-(2n+1)/4 = " + bose.get_str() + ")");
        }
        rep.add(std::move(r));
    }
    return rep;
}

Report verify_kinematical_constraints(const AlgebraContext& ctx)
{
    Report rep;
    const auto params = ctx_params(ctx);
    if (!ctx.eps().is_orthogonal()) {
        CheckRecord r = make_record("constraints", "constraints.precondition", "fermionic realization", params, true);
        r.status = Status::skipped;
        r.note = "the second-degree constraints are stated for so(2n) on fermions";
        rep.add(std::move(r));
        return rep;
    }
    const int n = ctx.n();
    const FockSpace space(n, Statistics::fermionic);
    const auto family = space.states(0);
    const std::string scope = "all " + std::to_string(family.size()) + " states";
    const auto gens = fock_generators(space);
    const auto k2 = k_step(k_base1(gens), gens);
    const FockOperator id = FockOperator::identity(space);
    const FockOperator zero(space);
    const Rational scalar(2 * n - 1, 4);

    {
        CheckRecord r = make_record("constraints", "constraints.mixed-scalar", "^2K^a_b = (1/4)(2n-1) d_ab", params,
                                    true, scope);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                record_equal(r, operator_equal(k2.k_mixed(a, b), a == b ? scalar * id : zero, family), tuple_str({a, b}));
        r.note = "scalar " + scalar.get_str();
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("constraints", "constraints.pair-zero", "^2K^{ab} = ^2K_ab = 0", params, true, scope);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                record_equal(r, operator_equal(k2.k_upper(a, b), zero, family), "upper" + tuple_str({a, b}));
                record_equal(r, operator_equal(k2.k_lower(a, b), zero, family), "lower" + tuple_str({a, b}));
            }
        rep.add(std::move(r));
    }

    // Chains: recursion words = block anticommutator forms = 1/2 (symmetrized identity), then realized.
    const auto wk2 = k_sequence(word_generators(ctx), 2)[2];
    const auto forms = second_order_forms(ctx);
    const auto uids = symmetrize_to_U(ctx);
    const auto images = realize_basis(space, ctx);
    auto uid = [&](const std::string& fam, int i, int j) -> const UIdentity& {
        for (const auto& u : uids)
            if (u.family == fam && u.i == i && u.j == j) return u;
        throw std::logic_error("missing identity component");
    };
    struct Chain {
        const char* id;
        const char* identity;
        const std::vector<UElement>& words;
        const std::vector<UElement>& form;
        const char* family;
    };
    const Chain chains[] = {
        {"constraints.upper-chain",
         "^2K^{ij} = 1/2 sum_k([A_ik,B_kj]_+ - [B_ik,A_jk]_+) = 1/2 sym((AB-BA^t) + (AB-BA^t)^t)_ij = 0", wk2.upper,
         forms.upper, "AB-BA^t"},
        {"constraints.lower-chain",
         "^2K_ij = 1/2 sum_k([C_ik,A_kj]_+ - [A_ki,C_kj]_+) = 1/2 sym((CA-A^tC) + (CA-A^tC)^t)_ij = 0", wk2.lower,
         forms.lower, "CA-A^tC"},
        {"constraints.mixed-chain",
         "^2K^i_j = 1/2 sum_k([A_ik,A_kj]_+ - [B_ik,C_kj]_+) = 1/2 sym(A^2-BC + ((A^t)^2-CB)^t)_ij, "
         "A^2-BC + ((A^t)^2-CB)^t = (2n-1)/2",
         wk2.mixed, forms.mixed, "A^2-BC"},
    };
    for (const auto& c : chains) {
        CheckRecord r = make_record("constraints", c.id, c.identity, params, true,
                                    "word identities in the free algebra; operators on " + scope);
        const bool mixed = std::string(c.family) == "A^2-BC";
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto k = static_cast<std::size_t>(i * n + j);
                const UIdentity& u = uid(c.family, i, j);
                record_words(r, c.words[k], c.form[k], "recursion vs block form" + tuple_str({i, j}));
                record_words(r, c.form[k], Rational(1, 2) * u.lhs, "block form vs symmetrized" + tuple_str({i, j}));
                const FockOperator realized = realize_word(u.lhs, images, id);
                const FockOperator expect = mixed && i == j ? make_rational(2 * n - 1, 2) * id : zero;
                record_equal(r, operator_equal(realized, expect, family), "realized" + tuple_str({i, j}));
            }
        if (mixed) r.note = "diagonal value " + make_rational(2 * n - 1, 2).get_str();
        rep.add(std::move(r));
    }
    return rep;
}

Report verify_annihilators(const AlgebraContext& ctx, int d_check)
{
    Report rep;
    const auto params = ctx_params(ctx);
    if (ctx.n() == 1 && ctx.eps().is_orthogonal()) {
        CheckRecord r = make_record("identities", "identities.annihilators", "U(L) identities vanish", params, true);
        r.status = Status::skipped;
        r.note = "degenerate rank: so(2) is abelian";
        rep.add(std::move(r));
        return rep;
    }
    const int n = ctx.n();
    const FockSpace space(n, statistics_for(ctx.eps()));
    const auto family = space.states(d_check);
    const std::string scope = family_scope(space, family, d_check);
    const auto images = realize_basis(space, ctx);
    const FockOperator id = FockOperator::identity(space);
    const FockOperator zero(space);
    const auto uids = symmetrize_to_U(ctx);
    const FockOperator i2 = realize_word(symmetrize(invariant_I2(ctx)), images, id);

    std::optional<Rational> i2_scalar = i2.as_scalar();
    {
        CheckRecord r = make_record("identities", "identities.I2-realized", "rho(sym I_2) = i_2 on each parity sector",
                                    params, i2_scalar.has_value(), scope);
        std::set<Rational> per_sector[2];
        bool diagonal = true;
        for (const auto& s : family) {
            int deg = 0;
            for (int k : s) deg += k;
            FockVector img = i2.apply(s);
            if (img.terms().size() == 1 && img.terms().begin()->first == s)
                per_sector[deg % 2].insert(img.terms().begin()->second);
            else if (!img.is_zero())
                diagonal = false;
            else
                per_sector[deg % 2].insert(Rational(0));
        }
        std::string note;
        for (int p = 0; p < 2; ++p) {
            note += p ? "; odd sector" : "even sector";
            for (const auto& v : per_sector[p]) note += " " + v.get_str();
        }
        if (!diagonal || (per_sector[0] != per_sector[1] && space.stats() == Statistics::fermionic))
            r.status = Status::fail;
        if (i2_scalar) {
            const Rational expect = space.stats() == Statistics::fermionic ? make_rational(n * (2 * n - 1), 2)
                                                                           : make_rational(-n * (2 * n + 1), 2);
            note += "; i_2 = " + i2_scalar->get_str() + (*i2_scalar == expect ? " = " : " != ") +
                    (space.stats() == Statistics::fermionic ? "n(2n-1)/2" : "-n(2n+1)/2");
        }
        r.note = note;
        rep.add(std::move(r));
    }

    const char* families[] = {"AB-BA^t", "CA-A^tC", "A^2-BC"};
    const char* formulas[] = {"sym((AB-BA^t) + eps (AB-BA^t)^t)_ij = 0 in the Fock realization",
                              "sym((CA-A^tC) + eps (CA-A^tC)^t)_ij = 0 in the Fock realization",
                              "sym(A^2-BC + ((A^t)^2-CB)^t)_ij - d_ij I_2/n = 0 in the Fock realization"};
    for (int f = 0; f < 3; ++f) {
        CheckRecord r = make_record("identities", std::string("identities.annihilators-") + (f == 0 ? "AB" : f == 1 ? "CA" : "A2"),
                                    formulas[f], params, true, scope);
        for (const auto& u : uids) {
            if (u.family != families[f]) continue;
            FockOperator realized = realize_word(u.lhs, images, id) - u.i2_coeff * i2;
            record_equal(r, operator_equal(realized, zero, family), tuple_str({u.i, u.j}));
        }
        rep.add(std::move(r));
    }
    {
        const bool fermi = space.stats() == Statistics::fermionic;
        CheckRecord r = make_record("identities", "identities.A2-scalar",
                                    fermi ? "A^2-BC + ((A^t)^2-CB)^t = (2n-1)/2 (symmetrized, realized)"
                                          : "A^2-BC + ((A^t)^2-CB)^t = i_2/n (symmetrized, realized)",
                                    params, true, scope);
        const Rational value = fermi ? make_rational(2 * n - 1, 2) : (i2_scalar ? *i2_scalar / n : Rational(0));
        for (const auto& u : uids) {
            if (u.family != "A^2-BC") continue;
            FockOperator realized = realize_word(u.lhs, images, id);
            record_equal(r, operator_equal(realized, u.i == u.j ? value * id : zero, family), tuple_str({u.i, u.j}));
        }
        r.note = "diagonal value " + value.get_str();
        rep.add(std::move(r));
    }
    return rep;
}

} // namespace lieid
