#include "lieid/runner.hpp"

#include "lieid/fock.hpp"
#include "lieid/kmatrix.hpp"
#include "lieid/ktensor.hpp"
#include "lieid/sympoly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lieid {

const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names{"closure",       "killing",     "projector", "identities", "fock-realization",
                                                "hnn-recursion", "constraints", "kmatrix",   "pairing"};
    return names;
}

void validate(const RunConfig& config)
{
    if (config.n < 1) throw std::invalid_argument("n must be >= 1");
    if (config.m_max < 0) throw std::invalid_argument("m-max must be >= 0");
    if (config.d_check < 0) throw std::invalid_argument("d-check must be >= 0");
    for (const auto& c : config.checks)
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw std::invalid_argument("unknown check '" + c + "'");
}

namespace {

Report dispatch(const std::string& check, const RunConfig& config)
{
    const AlgebraContext ctx(config.n, config.eps);
    if (check == "closure") {
        Report r = verify_closure(ctx);
        r.add(verify_jacobi(ctx));
        return r;
    }
    if (check == "killing") return verify_killing(ctx);
    if (check == "projector") return verify_projectors(ctx, config.cap_dim);
    if (check == "identities") {
        Report r = verify_identities(ctx, config.cap_dim);
        r.append(verify_annihilators(ctx, config.d_check));
        return r;
    }
    if (check == "fock-realization") return verify_fock(ctx, config.d_check);
    if (check == "hnn-recursion") return verify_recursion(ctx, config.m_max, config.d_check);
    if (check == "constraints") return verify_kinematical_constraints(ctx);
    if (check == "kmatrix") return verify_kmatrix(ctx, std::max(2, config.m_max + 1));
    if (check == "pairing") return verify_pairing(ctx, config.d_check);
    throw std::invalid_argument("unknown check '" + check + "'");
}

Report guarded(const std::string& check, const RunConfig& config, const std::string& reason)
{
    Report rep;
    CheckRecord r = make_record(check, check + ".resources", "within resource caps",
                                {{"n", config.n}, {"eps", config.eps.value()}}, true);
    r.status = Status::skipped;
    r.note = reason;
    rep.add(std::move(r));
    return rep;
}

} // namespace

Report run_check(const std::string& check, const RunConfig& config)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
        rep = dispatch(check, config);
    } catch (const DimensionCapExceeded& ex) {
        rep = guarded(check, config, ex.what());
    }
    if (config.timings) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        for (auto& r : rep.records) r.runtime_ms = ms;
    }
    return rep;
}

Report run(const RunConfig& config)
{
    validate(config);
    std::vector<std::string> checks;
    for (const auto& c : known_checks())
        if (config.checks.empty() || std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end())
            checks.push_back(c);

    std::vector<Report> results(checks.size());
    std::vector<std::exception_ptr> errors(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < checks.size(); k = next++) {
            try {
                results[k] = run_check(checks[k], config);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(checks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Report all;
    for (const auto& r : results) all.append(r);
    all.sort();
    return all;
}

int exit_code(const Report& report) { return report.count(Status::fail) == 0 ? 0 : 1; }

nlohmann::json report_to_json(const Report& report, const RunConfig& config)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["config"] = {{"algebra", config.eps.algebra_name()},
                   {"n", config.n},
                   {"checks", config.checks.empty() ? known_checks() : config.checks},
                   {"m_max", config.m_max},
                   {"d_check", config.d_check},
                   {"cap_dim", config.cap_dim}};
    j["summary"] = {{"pass", report.count(Status::pass)},
                    {"fail", report.count(Status::fail)},
                    {"skipped", report.count(Status::skipped)}};
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    j["records"] = std::move(records);
    return j;
}

Report report_from_json(const nlohmann::json& j)
{
    if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported report schema");
    Report rep;
    for (const auto& r : j.at("records")) rep.add(record_from_json(r));
    return rep;
}

std::string report_to_text(const Report& report)
{
    std::ostringstream out;
    out << std::left << std::setw(8) << "STATUS" << std::setw(40) << "ID" << std::setw(26) << "PARAMS"
        << "DETAIL\n";
    for (const auto& r : report.records) {
        std::string detail = r.note;
        if (r.status == Status::fail)
            detail = "witness " + r.witness + (r.residual.empty() ? "" : "; residual " + r.residual);
        if (r.runtime_ms) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(1) << *r.runtime_ms << " ms";
            detail += (detail.empty() ? "" : "; ") + t.str();
        }
        out << std::setw(8) << to_string(r.status) << std::setw(40) << r.id << std::setw(26) << r.params.dump()
            << detail << "\n";
    }
    out << "pass " << report.count(Status::pass) << ", fail " << report.count(Status::fail) << ", skipped "
        << report.count(Status::skipped) << "\n";
    return out.str();
}

std::optional<std::string> explain(const std::string& id)
{
    static const std::map<std::string, std::string> text{
        {"closure",
         "[S_ab, S_cd] = g_cb S_ad + g_da S_bc - g_ac S_bd - g_bd S_ac, compared with matrix commutators in the\n"
         "defining representation S_ab = sum_l (g_al e_lb - g_lb e_la); block relations for A, B, C; Jacobi identity.\n"
         "Scope: exhaustive over all ordered basis pairs (triples for Jacobi)."},
        {"killing",
         "tr(ad S_ab ad S_cd) = 4(n - eps)(g_ad g_cb - g_ac g_bd); the dual basis is taken from the trace oracle.\n"
         "Scope: exhaustive over all unordered basis pairs."},
        {"projector",
         "Casimir operator of the adjoint action on S^2(L): spectrum, spectral projectors, resolution of identity,\n"
         "idempotence, orthogonality, equivariance; target component dimension (N-1)(N+2)/2 (so) or (N+1)(N-2)/2 (sp)\n"
         "and its closed form in terms of T_ab and I_2. Scope: exact linear algebra on all of S^2(L), bounded by --cap-dim."},
        {"identities",
         "T_ab = S_al g^lm S_mb, I_2 = g_ab g_cd S_ad S_cb, E_ab = T_ab - g_ab I_2/2n: invariance, traces, symmetry,\n"
         "block forms AB - BA^t, CA - A^tC, A^2 - BC - d I_2/2n, their symmetrized U(L) forms, and their images in the\n"
         "Fock realization: (AB-BA^t)+eps(..)^t = 0, (CA-A^tC)+eps(..)^t = 0, and the A^2 family = (2n-1)/2 d Id on\n"
         "fermions. Scope: exact polynomial identities; fermions on all 2^n states, bosons up to --d-check."},
        {"fock-realization",
         "b_i b_j^+ - eps b_j^+ b_i = d_ij; E^i_j = b_i^+ b_j - (eps/2) d_ij, E_0^{ij} = b_i^+ b_j^+, E^0_ij = eps b_i b_j;\n"
         "the realization is a homomorphism on all basis pairs. Scope: normal forms, cross-checked on all fermionic\n"
         "states or on bosonic states of degree <= --d-check."},
        {"hnn-recursion",
         "^{m+1}K built from ^mK by anticommutators with E; ^mK^{ab} = -eps (-1)^m ^mK^{ba} and the same for ^mK_ab,\n"
         "m <= --m-max; ^2K^i_j as a scalar. Scope: normal forms of operator words, bosons bounded by --d-check."},
        {"constraints",
         "^2K^a_b = (1/4)(2n-1) d_ab, ^2K^{ab} = ^2K_ab = 0 in the fermionic realization of so(2n), and the chain\n"
         "recursion form = block anticommutator form = half of the symmetrized identity, operator by operator.\n"
         "Scope: all 2^n fermionic states."},
        {"kmatrix",
         "K = [[A, B], [-C, -A^t]] over commuting symbols: K_m = K^m has B_m = (-1)^m eps B_m^t, C_m = (-1)^m eps\n"
         "C_m^t, D_m = (-1)^m A_m^t; the induction lemmas; A_2 = A^2 - BC, B_2 = AB - BA^t, C_2 = CA - A^tC;\n"
         "E = g (K^2 - (I_2/2n) 1); entry counts N(N - eps)/2 for K and N(N + eps)/2 for K^2.\n"
         "Scope: exact polynomial identities, m <= --m-max + 1."},
        {"proposition",
         "For K_m = K^m = [[A_m, B_m], [-C_m, D_m]]: B_m = (-1)^m eps B_m^t, C_m = (-1)^m eps C_m^t, D_m = (-1)^m A_m^t,\n"
         "proved by induction through (K_m K_1)_D = (-1)^(m+1)(A_m^t A_1^t - C_m^t B_1^t) and the matching B and C\n"
         "chains. The displayed form D_m = -A_m^t holds only for odd m. Scope: exact polynomial identities."},
        {"pairing",
         "O = sum_k rho(e_k) M(e^k) on (Fock module) x (defining): O^2 + a O + b = 0 with rational a, b found by an\n"
         "exact solve, no linear relation, [O, rho(x) + M(x)] = 0, O = c K(rho)^t. Scope: normal forms of all entries."},
    };
    auto it = text.find(id);
    if (it == text.end()) return std::nullopt;
    return it->second;
}

} // namespace lieid
