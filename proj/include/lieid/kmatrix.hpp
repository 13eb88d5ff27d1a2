#pragma once

// The 2n x 2n matrix K = [[A, B], [-C, -A^t]] over the commuting block
// symbols, its powers, and the pairing operator on (Fock module) x (defining).

#include "lieid/blockpoly.hpp"
#include "lieid/fock.hpp"
#include "lieid/report.hpp"

#include <vector>

namespace lieid {

struct KMatrix {
    int m = 1;
    int n = 0;
    PolyMatrix entries;

    PolyMatrix a() const { return entries.block(0, 0, n, n); }
    PolyMatrix b() const { return entries.block(0, n, n, n); }
    /// C_m, read off the lower-left block -C_m.
    PolyMatrix c() const { return entries.block(n, 0, n, n) * Rational(-1); }
    PolyMatrix d() const { return entries.block(n, n, n, n); }
};

KMatrix build_k1(const BlockSymbols& syms);
/// K_1^m by repeated right multiplication with K_1; m >= 1.
KMatrix k_power(const KMatrix& k1, int m);
std::vector<KMatrix> k_powers(const KMatrix& k1, int m_max);

/// Entries counted up to sign, and the rank of their linear span.
std::size_t distinct_entries(const PolyMatrix& m);
std::size_t entry_span_rank(const PolyMatrix& m);

/// Block symmetries of K_m, the induction lemmas, and the m = 2 blocks.
Report verify_proposition(int n, Epsilon eps, int kmax);
/// E_ab (in block symbols) = (g (K^2 - I_2/2n))_ab, and tr K^2 = I_2.
Report verify_square_identities(const AlgebraContext& ctx);
/// Independent-entry counts of K and K^2 and the dimension arithmetic.
Report count_check(int n, Epsilon eps);
/// verify_proposition, verify_square_identities and count_check together.
Report verify_kmatrix(const AlgebraContext& ctx, int kmax);

/// O_pq = sum_k rho(e_k) M(e^k)_pq with e^k the Killing-dual basis.
using OperatorMatrix = std::vector<std::vector<FockOperator>>;
OperatorMatrix pairing_operator(const FockSpace& space, const AlgebraContext& ctx);
/// Realized K: [[rho A, rho B], [-rho C, -rho A^t]].
OperatorMatrix realized_k1(const FockSpace& space, const AlgebraContext& ctx);
OperatorMatrix multiply(const OperatorMatrix& x, const OperatorMatrix& y);

struct QuadraticRelation {
    bool linear_exists = false;
    bool found = false;
    Rational a; // O^2 + a O + b = 0
    Rational b;
};

/// Exact solve over normal-form coordinates of all entries.
QuadraticRelation find_quadratic(const OperatorMatrix& o);

/// Quadratic relation, minimality, equivariance and the link to the realized K.
Report verify_pairing(const AlgebraContext& ctx, int d_check);

} // namespace lieid
