#pragma once

// Quadratic part of the symmetric algebra S(L): the extended adjoint action,
// the Casimir operator, its spectral projectors, and the tensors T, I_2, E.

#include "lieid/algebra.hpp"
#include "lieid/blockpoly.hpp"
#include "lieid/matrix.hpp"
#include "lieid/poly.hpp"
#include "lieid/report.hpp"
#include "lieid/uelement.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lieid {

/// Symbols are generator-basis indices.
Poly generator_symbol(const AlgebraContext& ctx, int a, int b);
Poly to_poly(const LieElement& x);
SymbolNamer generator_namer(const AlgebraContext& ctx);

/// ad(x) extended to S(L) as a derivation.
Poly adjoint_on_poly(const AlgebraContext& ctx, const LieElement& x, const Poly& p);
Poly adjoint_on_sym2(const AlgebraContext& ctx, int a, int b, const Poly& p);

/// Coordinates on S^2(L): monomials x_i x_j, i <= j.
MonomialIndex sym2_basis(const AlgebraContext& ctx);

/// Matrix of a linear map on homogeneous polynomials of degree `degree`.
Matrix operator_matrix(const MonomialIndex& basis, const std::function<Poly(const Poly&)>& f);

Matrix adjoint_matrix_sym2(const AlgebraContext& ctx, const LieElement& x);

/// sum g_kn g_ml ad(S_kl) ad(S_mn) applied to p.
Poly casimir_apply(const AlgebraContext& ctx, const Poly& p);
/// sum_i ad(x_i) ad(x^i) with Killing-dual bases.
Poly casimir_apply_dual(const AlgebraContext& ctx, const std::vector<LieElement>& duals, const Poly& p);

class DimensionCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

struct CasimirOperator {
    Matrix raw;          // metric-contracted normalization
    Matrix killing_dual; // Killing-dual normalization
    /// raw = ratio * killing_dual
    Rational ratio;
};

/// Throws DimensionCapExceeded when dim S^2(L) > cap, std::invalid_argument for so(2).
CasimirOperator casimir_on_sym2(const AlgebraContext& ctx, std::size_t cap);

/// Distinct eigenvalues (ascending) of a diagonalizable operator with rational
/// spectrum; throws NonRationalSpectrum or std::domain_error (not diagonalizable).
std::vector<Rational> exact_spectrum(const Matrix& op);

struct ProjectorSpec {
    std::vector<Rational> eigenvalues;
    Rational target;
};

/// prod_{j != i} (C - c_j) / (c_i - c_j); identity on the target eigenspace.
/// Throws std::invalid_argument on repeated eigenvalues or a missing target.
Matrix projector(const Matrix& casimir, const ProjectorSpec& spec);

/// Operator printed with the closed form: C'(C' - 8(n-2eps))(C' - 4(2n-eps)) /
/// ((-4n)(4n-16eps)(4n-4eps)) with C' = raw/2. nullopt when the denominator vanishes.
std::optional<Matrix> printed_projection_operator(const AlgebraContext& ctx, const Matrix& raw_casimir);

/// T_ab = S_al g^lm S_mb
Poly tensor_T(const AlgebraContext& ctx, int a, int b);
/// I_2 = g_ab g_cd S_ad S_cb
Poly invariant_I2(const AlgebraContext& ctx);

struct IdentityTensor {
    int n;
    std::vector<Poly> T; // (2n)^2, row-major
    std::vector<Poly> E; // T_ab - g_ab I_2 / 2n
    Poly I2;
    const Poly& t(int a, int b) const { return T[static_cast<std::size_t>(a * 2 * n + b)]; }
    const Poly& e(int a, int b) const { return E[static_cast<std::size_t>(a * 2 * n + b)]; }
};

IdentityTensor identity_components(const AlgebraContext& ctx);

/// E written directly in block symbols, as a 2n x 2n matrix:
/// E_{i+n,j} = (A^2 - BC)_ij - d_ij I_2/2n, E_{i+n,j+n} = (AB - BA^t)_ij,
/// E_ij = eps (A^tC - CA)_ij, E_{i,j+n} = eps ((A^t)^2 - CB)_ij - eps d_ij I_2/2n.
PolyMatrix identity_block_forms(const BlockSymbols& syms);

/// I_2 = tr(A^2 - BC + (A^t)^2 - CB) in block symbols.
Poly invariant_I2_blocks(const BlockSymbols& syms);

/// The quadratic U(L) identities, lhs = i2_coeff * sym(I_2), obtained by
/// symmetrizing the block polynomials:
///   (AB - BA^t)_ij + eps (AB - BA^t)_ji = 0
///   (CA - A^tC)_ij + eps (CA - A^tC)_ji = 0
///   (A^2 - BC)_ij + ((A^t)^2 - CB)_ji = d_ij I_2 / n
struct UIdentity {
    std::string family;
    int i;
    int j;
    UElement lhs;
    Rational i2_coeff;
};

std::vector<UIdentity> symmetrize_to_U(const AlgebraContext& ctx);

/// Spectral structure and the projection checks on S^2(L).
Report verify_projectors(const AlgebraContext& ctx, std::size_t cap);

/// T, I_2 and E: invariance, traces, block forms, U(L) forms.
Report verify_identities(const AlgebraContext& ctx, std::size_t cap);

/// Dimension of the target component predicted by the counting formulas:
/// (N-1)(N+2)/2 for eps = +1 and (N+1)(N-2)/2 for eps = -1, N = 2n.
long target_dimension(int n, Epsilon eps);

} // namespace lieid
