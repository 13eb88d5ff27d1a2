// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.

#include "lieid/algebra.hpp"
#include "lieid/fock.hpp"
#include "lieid/kmatrix.hpp"
#include "lieid/ktensor.hpp"
#include "lieid/sympoly.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace lieid;

namespace {

const Epsilon so = Epsilon::orthogonal();
const Epsilon sp = Epsilon::symplectic();

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    /// Every record passes; skipped records are failures unless allowed.
    void require_pass(const Report& r, const std::string& where, bool allow_skipped = false)
    {
        for (const auto& rec : r.records) {
            if (rec.status == Status::pass) continue;
            if (rec.status == Status::skipped && allow_skipped) continue;
            require(false, where + ": " + rec.id + " " + to_string(rec.status) + " " + rec.witness + " " + rec.residual);
        }
    }
};

const CheckRecord* find(const Report& r, const std::string& id)
{
    for (const auto& rec : r.records)
        if (rec.id == id) return &rec;
    return nullptr;
}

std::string label(int n, Epsilon e) { return AlgebraContext(n, e).name(); }

int failures = 0;

void criterion(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& ex) {
        out.ok = false;
        out.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) out.require(false, "time limit exceeded");
    const bool ok = out.ok && secs <= limit_s;
    if (!ok) ++failures;
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << secs << "s / " << limit_s << "s";
    std::cout << "criterion " << number << " [PRIMARY] " << title << ": " << (ok ? "PASS" : "FAIL") << " (" << t.str()
              << ")" << (out.detail.empty() ? "" : " " + out.detail) << std::endl;
}

} // namespace

int main()
{
    criterion(1, "commutator closure vs defining-matrix oracle", 10.0, [] {
        Outcome o;
        const std::pair<int, Epsilon> cases[] = {{2, so}, {3, so}, {1, sp}, {2, sp}, {3, sp}};
        for (const auto& [n, e] : cases) {
            Report r = verify_closure(AlgebraContext(n, e));
            o.require(find(r, "closure.matrix-oracle") != nullptr, label(n, e) + ": no matrix-oracle record");
            o.require_pass(r, label(n, e));
        }
        o.detail = o.ok ? "so(4), so(6), sp(2), sp(4), sp(6), all ordered basis pairs" : o.detail;
        return o;
    });

    criterion(2, "Killing form closed form vs tr(ad ad)", 30.0, [] {
        Outcome o;
        std::string constants;
        for (int n = 1; n <= 3; ++n)
            for (Epsilon e : {so, sp}) {
                Report r = verify_killing(AlgebraContext(n, e));
                const auto* trace = find(r, "killing.trace-oracle");
                o.require(trace && trace->status == Status::pass, label(n, e) + ": trace oracle");
                // so(2) is abelian: the dual-basis records are skipped there.
                o.require_pass(r, label(n, e), n == 1 && e == so);
                if (n == 3) {
                    const auto* norm = find(r, "killing.normalization");
                    if (norm) constants += " " + label(n, e) + " " + norm->note.substr(0, norm->note.find(';')) + ";";
                }
            }
        if (o.ok) o.detail = "n <= 3, both eps;" + constants;
        return o;
    });

    criterion(3, "projector suite for n = 2", 120.0, [] {
        Outcome o;
        for (Epsilon e : {so, sp}) {
            Report r = verify_projectors(AlgebraContext(2, e), 10000);
            for (const char* id : {"projector.resolution", "projector.orthogonality", "projector.equivariance",
                                   "projector.closed-form", "projector.printed-operator", "projector.target-dimension"}) {
                const auto* rec = find(r, id);
                o.require(rec && rec->status == Status::pass, label(2, e) + ": " + id);
            }
            o.require_pass(r, label(2, e));
            o.require(rank(projector(casimir_on_sym2(AlgebraContext(2, e), 10000).raw,
                                     {exact_spectrum(casimir_on_sym2(AlgebraContext(2, e), 10000).raw), Rational(16)})) ==
                          static_cast<std::size_t>(e == so ? 9 : 5),
                      label(2, e) + ": target rank");
        }
        if (o.ok) o.detail = "target ranks 9 (so(4)) and 5 (sp(4))";
        return o;
    });

    criterion(4, "annihilators in the Fock realizations", 120.0, [] {
        Outcome o;
        for (int n : {2, 3, 4}) {
            Report r = verify_annihilators(AlgebraContext(n, so), 6);
            o.require_pass(r, label(n, so));
            const auto* a2 = find(r, "identities.A2-scalar");
            o.require(a2 && a2->note.find(make_rational(2 * n - 1, 2).get_str()) != std::string::npos,
                      label(n, so) + ": A^2 family scalar");
        }
        for (int n : {2, 3}) o.require_pass(verify_annihilators(AlgebraContext(n, sp), 6), label(n, sp));
        // Negative control: the same expressions are nonzero in the defining representation.
        for (const auto& [n, e] : {std::pair{2, so}, std::pair{3, so}, std::pair{2, sp}, std::pair{3, sp}}) {
            const auto* ctl = find(verify_identities(AlgebraContext(n, e), 10000), "identities.defining-control");
            o.require(ctl && ctl->status == Status::pass, label(n, e) + ": defining-representation control");
        }
        if (o.ok) o.detail = "fermions n = 2,3,4 all states; bosons n = 2,3 degree <= 6; defining control nonzero";
        return o;
    });

    criterion(5, "kinematical constraints", 60.0, [] {
        Outcome o;
        std::string scalars;
        for (int n : {2, 3, 4}) {
            Report r = verify_kinematical_constraints(AlgebraContext(n, so));
            o.require_pass(r, label(n, so));
            const auto* s = find(r, "constraints.mixed-scalar");
            const std::string expected = "scalar " + make_rational(2 * n - 1, 4).get_str();
            o.require(s && s->note == expected, label(n, so) + ": expected " + expected);
            for (const char* id : {"constraints.pair-zero", "constraints.upper-chain", "constraints.lower-chain",
                                   "constraints.mixed-chain"})
                o.require(find(r, id) != nullptr, label(n, so) + ": missing " + id);
            if (s) scalars += " " + s->note.substr(7);
        }
        if (o.ok) o.detail = "scalars" + scalars;
        return o;
    });

    criterion(6, "operator recursion parity", 300.0, [] {
        Outcome o;
        for (int n = 1; n <= 3; ++n)
            for (Epsilon e : {so, sp}) {
                Report r = verify_recursion(AlgebraContext(n, e), 4, 6);
                o.require_pass(r, label(n, e));
                int sym = 0;
                for (const auto& rec : r.records) sym += rec.id == "hnn-recursion.symmetry";
                o.require(sym == 5, label(n, e) + ": expected symmetry records for m = 0..4");
            }
        if (o.ok) o.detail = "m <= 4, n <= 3, both eps, bosons degree <= 6";
        return o;
    });

    criterion(7, "K-matrix block symmetries", 120.0, [] {
        Outcome o;
        for (int n = 1; n <= 3; ++n)
            for (Epsilon e : {so, sp}) {
                Report r = verify_proposition(n, e, 5);
                o.require_pass(r, label(n, e));
                o.require_pass(verify_square_identities(AlgebraContext(n, e)), label(n, e));
                int blocks = 0;
                for (const auto& rec : r.records) blocks += rec.id == "kmatrix.block-symmetry";
                o.require(blocks == 5, label(n, e) + ": expected block-symmetry records for m = 1..5");
            }
        if (o.ok) o.detail = "m <= 5, n <= 3; D_m = (-1)^m A_m^t holds, the displayed -A_m^t only for odd m";
        return o;
    });

    criterion(8, "pairing operator for so(4)", 60.0, [] {
        Outcome o;
        Report r = verify_pairing(AlgebraContext(2, so), 6);
        o.require_pass(r, "so(4)");
        for (const char* id : {"pairing.quadratic", "pairing.minimality", "pairing.equivariance"}) {
            const auto* rec = find(r, id);
            o.require(rec && rec->status == Status::pass, std::string("so(4): ") + id);
        }
        if (o.ok) o.detail = find(r, "pairing.quadratic")->note;
        return o;
    });

    criterion(9, "structural counts", 60.0, [] {
        Outcome o;
        for (int n = 1; n <= 4; ++n) {
            o.require(AlgebraContext(n, so).dim() == static_cast<std::size_t>(n * (2 * n - 1)), label(n, so) + ": dim");
            o.require(AlgebraContext(n, sp).dim() == static_cast<std::size_t>(n * (2 * n + 1)), label(n, sp) + ": dim");
            for (Epsilon e : {so, sp}) {
                Report r = count_check(n, e);
                // so(2): the K^2 count degenerates (abelian algebra), recorded as skipped.
                o.require_pass(r, label(n, e), n == 1 && e == so);
            }
        }
        if (o.ok) o.detail = "n <= 4, both eps (so(2) K^2 count skipped: abelian)";
        return o;
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
