#include "lieid/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieid {

Statistics statistics_for(Epsilon eps) { return eps.is_orthogonal() ? Statistics::fermionic : Statistics::bosonic; }

int sign_of(Statistics s) { return s == Statistics::fermionic ? 1 : -1; }

// ---------------------------------------------------------------------------
// Vectors

void FockVector::add_term(const OccState& s, const Rational& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o)
{
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o)
{
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

FockVector FockVector::basis(const OccState& s)
{
    FockVector v;
    v.add_term(s, Rational(1));
    return v;
}

std::string to_string(const OccState& s)
{
    std::string r;
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r;
}

nlohmann::json to_json(const FockVector& v)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [s, c] : v.terms())
        j[to_string(s)] = {c.get_num().get_str(), c.get_den().get_str()};
    return j;
}

// ---------------------------------------------------------------------------
// Space

FockSpace::FockSpace(int modes, Statistics stats) : modes_(modes), stats_(stats)
{
    if (modes < 1) throw std::invalid_argument("FockSpace needs at least one mode");
}

bool FockSpace::is_valid(const OccState& s) const
{
    if (static_cast<int>(s.size()) != modes_) return false;
    for (int k : s)
        if (k < 0 || (stats_ == Statistics::fermionic && k > 1)) return false;
    return true;
}

std::vector<OccState> FockSpace::states(int max_degree) const
{
    std::vector<OccState> out;
    OccState s(static_cast<std::size_t>(modes_), 0);
    const int cap = stats_ == Statistics::fermionic ? 1 : max_degree;
    // Odometer over occupations; bosonic states are cut by total degree.
    while (true) {
        int total = 0;
        for (int k : s) total += k;
        if (stats_ == Statistics::fermionic || total <= max_degree) out.push_back(s);
        int i = modes_ - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == cap) s[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
    }
    std::stable_sort(out.begin(), out.end(), [](const OccState& a, const OccState& b) {
        int ta = 0, tb = 0;
        for (int k : a) ta += k;
        for (int k : b) tb += k;
        return ta < tb;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Operators

namespace {

using Key = FockOperator::Key;
using Terms = FockOperator::Terms;

void accumulate(Terms& t, const Key& k, const Rational& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = t.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t.erase(it);
    }
}

int count_above(const Key& key, std::size_t offset, int n, int mode)
{
    int c = 0;
    for (int m = mode + 1; m < n; ++m) c += key[offset + static_cast<std::size_t>(m)];
    return c;
}

// key * b_mode (annihilator)
void right_mul_annihilator(Terms& out, Key key, const Rational& coef, int n, bool fermi, int mode)
{
    const std::size_t slot = static_cast<std::size_t>(n + mode);
    if (fermi) {
        if (key[slot]) return;
        const int sign = count_above(key, static_cast<std::size_t>(n), n, mode) % 2 ? -1 : 1;
        key[slot] = 1;
        accumulate(out, key, coef * sign);
    } else {
        ++key[slot];
        accumulate(out, key, coef);
    }
}

// key * b_mode^+ (creator), moving the creator through the annihilators.
void right_mul_creator(Terms& out, const Key& key, const Rational& coef, int n, bool fermi, int mode)
{
    const std::size_t ann = static_cast<std::size_t>(n + mode);
    const std::size_t cre = static_cast<std::size_t>(mode);
    int total_ann = 0;
    for (int m = 0; m < n; ++m) total_ann += key[static_cast<std::size_t>(n + m)];

    if (key[ann] > 0) {
        Key k = key;
        if (fermi) {
            const int sign = count_above(key, static_cast<std::size_t>(n), n, mode) % 2 ? -1 : 1;
            k[ann] = 0;
            accumulate(out, k, coef * sign);
        } else {
            const long mult = key[ann];
            --k[ann];
            accumulate(out, k, coef * mult);
        }
    }

    Key k = key;
    if (fermi) {
        if (k[cre]) return;
        int swaps = total_ann + count_above(key, 0, n, mode);
        k[cre] = 1;
        accumulate(out, k, swaps % 2 ? Rational(-coef) : coef);
    } else {
        ++k[cre];
        accumulate(out, k, coef);
    }
}

// Single-letter action on a basis state.
bool act(OccState& s, Rational& c, bool fermi, int mode, bool creator)
{
    int& occ = s[static_cast<std::size_t>(mode)];
    if (fermi) {
        if (creator ? occ == 1 : occ == 0) return false;
        int before = 0;
        for (int m = 0; m < mode; ++m) before += s[static_cast<std::size_t>(m)];
        if (before % 2) c = -c;
        occ = creator ? 1 : 0;
        return true;
    }
    if (creator) {
        ++occ;
        return true;
    }
    if (occ == 0) return false;
    c *= occ;
    --occ;
    return true;
}

} // namespace

FockOperator FockOperator::identity(const FockSpace& space, const Rational& c)
{
    FockOperator o(space);
    o.add_term(Key(static_cast<std::size_t>(2 * space.modes()), 0), c);
    return o;
}

FockOperator FockOperator::creation(const FockSpace& space, int mode)
{
    if (mode < 0 || mode >= space.modes()) throw std::out_of_range("creation: mode out of range");
    FockOperator o(space);
    Key k(static_cast<std::size_t>(2 * space.modes()), 0);
    k[static_cast<std::size_t>(mode)] = 1;
    o.add_term(k, Rational(1));
    return o;
}

FockOperator FockOperator::annihilation(const FockSpace& space, int mode)
{
    if (mode < 0 || mode >= space.modes()) throw std::out_of_range("annihilation: mode out of range");
    FockOperator o(space);
    Key k(static_cast<std::size_t>(2 * space.modes()), 0);
    k[static_cast<std::size_t>(space.modes() + mode)] = 1;
    o.add_term(k, Rational(1));
    return o;
}

std::optional<Rational> FockOperator::as_scalar() const
{
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    for (auto x : k)
        if (x) return std::nullopt;
    return c;
}

void FockOperator::add_term(const Key& k, const Rational& c)
{
    if (k.size() != static_cast<std::size_t>(2 * space_.modes())) throw std::invalid_argument("operator key size");
    accumulate(terms_, k, c);
}

void FockOperator::require_same(const FockOperator& o) const
{
    if (!(space_ == o.space_)) throw std::invalid_argument("operators act on different Fock spaces");
}

FockOperator& FockOperator::operator+=(const FockOperator& o)
{
    require_same(o);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& o)
{
    require_same(o);
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

FockOperator& FockOperator::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b)
{
    a.require_same(b);
    const int n = a.space_.modes();
    const bool fermi = a.space_.stats() == Statistics::fermionic;
    FockOperator result(a.space_);
    for (const auto& [kb, cb] : b.terms_) {
        Terms cur;
        for (const auto& [ka, ca] : a.terms_) accumulate(cur, ka, ca * cb);
        // Right-multiply by the letters of kb in order: creators, then annihilators.
        for (int m = 0; m < n; ++m)
            for (int rep = 0; rep < kb[static_cast<std::size_t>(m)]; ++rep) {
                Terms next;
                for (const auto& [k, c] : cur) right_mul_creator(next, k, c, n, fermi, m);
                cur.swap(next);
            }
        for (int m = 0; m < n; ++m)
            for (int rep = 0; rep < kb[static_cast<std::size_t>(n + m)]; ++rep) {
                Terms next;
                for (const auto& [k, c] : cur) right_mul_annihilator(next, k, c, n, fermi, m);
                cur.swap(next);
            }
        for (const auto& [k, c] : cur) accumulate(result.terms_, k, c);
    }
    return result;
}

FockVector FockOperator::apply(const OccState& s) const
{
    const int n = space_.modes();
    const bool fermi = space_.stats() == Statistics::fermionic;
    FockVector out;
    for (const auto& [k, c] : terms_) {
        OccState st = s;
        Rational coef = c;
        bool alive = true;
        // Rightmost letters act first: annihilators from the highest mode down, then creators.
        for (int m = n - 1; m >= 0 && alive; --m)
            for (int r = 0; r < k[static_cast<std::size_t>(n + m)] && alive; ++r) alive = act(st, coef, fermi, m, false);
        for (int m = n - 1; m >= 0 && alive; --m)
            for (int r = 0; r < k[static_cast<std::size_t>(m)] && alive; ++r) alive = act(st, coef, fermi, m, true);
        if (alive) out.add_term(st, coef);
    }
    return out;
}

FockVector FockOperator::apply(const FockVector& v) const
{
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
        FockVector img = apply(s);
        for (const auto& [t, d] : img.terms()) out.add_term(t, c * d);
    }
    return out;
}

std::set<int> FockOperator::grades() const
{
    const int n = space_.modes();
    std::set<int> g;
    for (const auto& [k, c] : terms_) {
        int d = 0;
        for (int m = 0; m < n; ++m) d += k[static_cast<std::size_t>(m)] - k[static_cast<std::size_t>(n + m)];
        g.insert(d);
    }
    return g;
}

int FockOperator::max_grade_shift() const
{
    int s = 0;
    for (int g : grades()) s = std::max(s, std::abs(g));
    return s;
}

bool FockOperator::preserves_parity() const
{
    for (int g : grades())
        if (g % 2) return false;
    return true;
}

std::string FockOperator::to_string() const
{
    if (terms_.empty()) return "0";
    const int n = space_.modes();
    std::string s;
    for (const auto& [k, c] : terms_) {
        const bool neg = sgn(c) < 0;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        s += Rational(neg ? Rational(-c) : c).get_str();
        for (int m = 0; m < n; ++m)
            for (int r = 0; r < k[static_cast<std::size_t>(m)]; ++r) s += " b" + std::to_string(m + 1) + "+";
        for (int m = 0; m < n; ++m)
            for (int r = 0; r < k[static_cast<std::size_t>(n + m)]; ++r) s += " b" + std::to_string(m + 1);
    }
    return s;
}

FockOperator anticommutator(const FockOperator& x, const FockOperator& y) { return x * y + y * x; }
FockOperator commutator(const FockOperator& x, const FockOperator& y) { return x * y - y * x; }
FockOperator graded_commutator(const FockOperator& x, const FockOperator& y, int eps)
{
    return x * y + Rational(eps) * (y * x);
}

FockOperator hnn_generator(const FockSpace& space, HnnKind kind, int i, int j)
{
    const int n = space.modes();
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("hnn_generator: index out of range");
    const Rational e(space.eps());
    switch (kind) {
    case HnnKind::mixed: {
        FockOperator o = FockOperator::creation(space, i) * FockOperator::annihilation(space, j);
        if (i == j) o += FockOperator::identity(space, -e / 2);
        return o;
    }
    case HnnKind::raising:
        return FockOperator::creation(space, i) * FockOperator::creation(space, j);
    case HnnKind::lowering:
        return e * (FockOperator::annihilation(space, i) * FockOperator::annihilation(space, j));
    }
    throw std::logic_error("unknown generator kind");
}

std::vector<FockOperator> realize_basis(const FockSpace& space, const AlgebraContext& ctx)
{
    if (space.stats() != statistics_for(ctx.eps()) || space.modes() != ctx.n())
        throw std::invalid_argument("realize: Fock statistics or mode count do not match " + ctx.name());
    const int n = ctx.n();
    const Rational me(-ctx.e());
    std::vector<FockOperator> out;
    for (const auto& [a, b] : ctx.basis()) {
        if (a >= n && b < n)
            out.push_back(hnn_generator(space, HnnKind::mixed, a - n, b));
        else if (a >= n && b >= n)
            out.push_back(hnn_generator(space, HnnKind::raising, a - n, b - n));
        else if (a < n && b < n) // S_ij = -eps C_ij = eps E^0_ij
            out.push_back(-me * hnn_generator(space, HnnKind::lowering, a, b));
        else // S_{i,j+n} = -eps A_ji
            out.push_back(me * hnn_generator(space, HnnKind::mixed, b - n, a));
    }
    return out;
}

FockOperator realize(const FockSpace& space, const AlgebraContext& ctx, const LieElement& x)
{
    const auto images = realize_basis(space, ctx);
    FockOperator r(space);
    for (const auto& [i, c] : x.coeffs()) r += c * images[i];
    return r;
}

std::string EqualityResult::scope() const
{
    std::string s = "normal-form comparison; " + std::to_string(states_checked) + " states";
    if (max_degree >= 0) s += ", degree <= " + std::to_string(max_degree);
    s += ", grade shift " + std::to_string(grade_shift);
    return s;
}

EqualityResult operator_equal(const FockOperator& a, const FockOperator& b, const std::vector<OccState>& family)
{
    EqualityResult r;
    const FockOperator d = a - b;
    r.normal_forms_equal = d.is_zero();
    r.grade_shift = d.max_grade_shift();
    for (const auto& s : family) {
        int deg = 0;
        for (int k : s) deg += k;
        r.max_degree = std::max(r.max_degree, deg);
        ++r.states_checked;
        FockVector img = d.apply(s);
        if (!img.is_zero() && r.witness.empty()) {
            r.witness = "|" + to_string(s) + ">";
            r.residual = to_json(img).dump();
        }
    }
    r.equal = r.normal_forms_equal && r.witness.empty();
    if (!r.normal_forms_equal && r.residual.empty()) r.residual = d.to_string();
    return r;
}

// ---------------------------------------------------------------------------
// Report

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

} // namespace

Report verify_fock(const AlgebraContext& ctx, int d_check)
{
    Report rep;
    const FockSpace space(ctx.n(), statistics_for(ctx.eps()));
    const auto family = space.states(d_check);
    const int n = ctx.n();
    const int e = ctx.e();
    const auto params = ctx_params(ctx);
    const bool fermi = space.stats() == Statistics::fermionic;
    const std::string fam = fermi ? "all " + std::to_string(family.size()) + " states"
                                  : std::to_string(family.size()) + " states of degree <= " + std::to_string(d_check);
    auto cr = [&](int i) { return FockOperator::creation(space, i); };
    auto an = [&](int i) { return FockOperator::annihilation(space, i); };
    const FockOperator id = FockOperator::identity(space);
    const FockOperator zero(space);
    std::size_t max_shift = 0;

    {
        CheckRecord r = make_record("fock-realization", "fock.canonical-relations", "[b_i, b_j^+]_eps = d_ij",
                                    params, true, fam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                record_equal(r, operator_equal(graded_commutator(an(i), cr(j), e), i == j ? id : zero, family),
                             tuple_str({i, j}));
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("fock-realization", "fock.canonical-zero",
                                    "[b_i, b_j]_eps = [b_i^+, b_j^+]_eps = 0", params, true, fam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                record_equal(r, operator_equal(graded_commutator(an(i), an(j), e), zero, family), tuple_str({i, j}));
                record_equal(r, operator_equal(graded_commutator(cr(i), cr(j), e), zero, family), tuple_str({i, j}));
            }
        r.note = "printed right side d_ij I read as 0";
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("fock-realization", "fock.generator-forms",
                                    "E^i_j = (1/2)[b_i^+, b_j]_{-eps}, E_0^{ij} = (1/2)[b_i^+, b_j^+]_{-eps}, "
                                    "E^0_ij = (eps/2)[b_i, b_j]_{-eps}",
                                    params, true, fam);
        const Rational half(1, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                record_equal(r, operator_equal(hnn_generator(space, HnnKind::mixed, i, j),
                                               half * graded_commutator(cr(i), an(j), -e), family),
                             "E^i_j" + tuple_str({i, j}));
                record_equal(r, operator_equal(hnn_generator(space, HnnKind::raising, i, j),
                                               half * graded_commutator(cr(i), cr(j), -e), family),
                             "E_0" + tuple_str({i, j}));
                record_equal(r, operator_equal(hnn_generator(space, HnnKind::lowering, i, j),
                                               Rational(e) * half * graded_commutator(an(i), an(j), -e), family),
                             "E^0" + tuple_str({i, j}));
            }
        rep.add(std::move(r));
    }

    const auto images = realize_basis(space, ctx);
    {
        const std::size_t D = ctx.dim();
        CheckRecord r = make_record("fock-realization", "fock.homomorphism",
                                    "rho([x,y]) = rho(x) rho(y) - rho(y) rho(x)", params, true,
                                    "exhaustive: " + std::to_string(D * D) + " basis pairs on " + fam);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                FockOperator lhs(space);
                for (const auto& [k, c] : ctx.structure(i, j).coeffs()) lhs += c * images[k];
                auto eq = operator_equal(lhs, commutator(images[i], images[j]), family);
                max_shift = std::max(max_shift, static_cast<std::size_t>(eq.grade_shift));
                record_equal(r, eq, "basis " + std::to_string(i + 1) + "," + std::to_string(j + 1));
            }
        rep.add(std::move(r));
    }
    {
        // Block relations for A = E^i_j, B = E_0^{ij}, C = -E^0_ij.
        auto A = [&](int i, int j) { return hnn_generator(space, HnnKind::mixed, i, j); };
        auto B = [&](int i, int j) { return hnn_generator(space, HnnKind::raising, i, j); };
        auto C = [&](int i, int j) { return -hnn_generator(space, HnnKind::lowering, i, j); };
        auto d = [](int a, int b) { return Rational(a == b ? 1 : 0); };
        const Rational eps(e);
        CheckRecord r = make_record("fock-realization", "fock.block-relations",
                                    "[A_ij,A_kl] = d_jk A_il - d_il A_kj; [B,B] = [C,C] = 0; [A_ij,B_kl] = d_jk B_il - "
                                    "eps d_jl B_ik; [A_ij,C_kl] = eps d_il C_jk - d_ik C_jl; [B_ij,C_kl] = -d_jk A_il "
                                    "- d_il A_jk + eps d_ik A_jl + eps d_jl A_ik",
                                    params, true, "all index quadruples on " + fam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const std::string w = tuple_str({i, j, k, l});
                        record_equal(r, operator_equal(commutator(A(i, j), A(k, l)), d(j, k) * A(i, l) - d(i, l) * A(k, j), family), "AA" + w);
                        record_equal(r, operator_equal(commutator(B(i, j), B(k, l)), zero, family), "BB" + w);
                        record_equal(r, operator_equal(commutator(C(i, j), C(k, l)), zero, family), "CC" + w);
                        record_equal(r, operator_equal(commutator(A(i, j), B(k, l)), d(j, k) * B(i, l) - eps * d(j, l) * B(i, k), family), "AB" + w);
                        record_equal(r, operator_equal(commutator(A(i, j), C(k, l)), eps * d(i, l) * C(j, k) - d(i, k) * C(j, l), family), "AC" + w);
                        record_equal(r, operator_equal(commutator(B(i, j), C(k, l)),
                                                       -d(j, k) * A(i, l) - d(i, l) * A(j, k) + eps * d(i, k) * A(j, l) + eps * d(j, l) * A(i, k),
                                                       family),
                                     "BC" + w);
                    }
        rep.add(std::move(r));
    }
    {
        CheckRecord r = make_record("fock-realization", "fock.parity", "rho(x) changes total occupation by an even number",
                                    params, true, "all generators");
        for (std::size_t i = 0; i < images.size(); ++i)
            if (!images[i].preserves_parity()) {
                r.status = Status::fail;
                r.witness = "basis " + std::to_string(i + 1);
                break;
            }
        if (fermi) r.note = "even and odd occupation sectors are invariant subspaces";
        rep.add(std::move(r));
    }
    return rep;
}

} // namespace lieid
