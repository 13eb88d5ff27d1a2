#pragma once

// The orthogonal and symplectic algebras so(2n) / sp(2n), handled through a
// single sign eps: the algebra preserves the bilinear form (u,v) = eps (v,u).
//
// Generators S_ab (a,b in [0, 2n)) obey S_ab = -eps S_ba, so only the pairs
// a < b (eps = +1) or a <= b (eps = -1) are independent; those pairs, in
// lexicographic order, form the basis of the algebra.

#include "lieid/matrix.hpp"
#include "lieid/rational.hpp"
#include "lieid/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lieid {

class Epsilon {
public:
    static constexpr Epsilon orthogonal() { return Epsilon(1); }
    static constexpr Epsilon symplectic() { return Epsilon(-1); }
    /// Throws std::invalid_argument unless v is +1 or -1.
    static Epsilon from_int(int v);

    constexpr int value() const { return value_; }
    constexpr bool is_orthogonal() const { return value_ == 1; }
    std::string algebra_name() const { return is_orthogonal() ? "so" : "sp"; }

    friend constexpr bool operator==(Epsilon, Epsilon) = default;

private:
    constexpr explicit Epsilon(int v) : value_(v) {}
    int value_;
};

struct IndexPair {
    int a;
    int b;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// A generator S_ab rewritten as sign * basis[index]; nullopt means S_ab = 0.
struct CanonicalGenerator {
    int sign;
    std::size_t index;
};

class LieElement;

class AlgebraContext {
public:
    AlgebraContext(int n, Epsilon eps);

    int n() const { return n_; }
    Epsilon eps() const { return eps_; }
    int e() const { return eps_.value(); }
    int defining_dim() const { return 2 * n_; }
    std::size_t dim() const { return basis_.size(); }
    std::string name() const;

    const std::vector<IndexPair>& basis() const { return basis_; }
    bool is_independent(int a, int b) const;
    std::optional<std::size_t> index_of(int a, int b) const;
    std::optional<CanonicalGenerator> canonical(int a, int b) const;

    /// g_ab = delta(a, b+n) + eps delta(a+n, b)
    int g(int a, int b) const;
    /// (g^{-1})_ab = eps g_ab
    int g_inv(int a, int b) const { return e() * g(a, b); }
    /// The unique c with g_ac != 0.
    int partner(int a) const { return a < n_ ? a + n_ : a - n_; }

    LieElement generator(int a, int b) const;
    LieElement basis_element(std::size_t i) const;
    LieElement zero() const;

    /// [basis_i, basis_j] from the unified commutation relation.
    const LieElement& structure(std::size_t i, std::size_t j) const;

    friend bool operator==(const AlgebraContext& x, const AlgebraContext& y)
    {
        return x.n_ == y.n_ && x.eps_ == y.eps_;
    }

private:
    int n_;
    Epsilon eps_;
    std::vector<IndexPair> basis_;
    std::vector<int> index_table_; // (2n)^2 -> basis index or -1
    std::shared_ptr<const std::vector<LieElement>> structure_;
};

/// Rational combination of basis generators; zero coefficients are never stored.
class LieElement {
public:
    LieElement(int n, Epsilon eps) : n_(n), eps_(eps) {}

    int n() const { return n_; }
    Epsilon eps() const { return eps_; }
    const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(std::size_t index, const Rational& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& s);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational& s) { return a *= s; }
    friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
    friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    std::vector<Rational> to_vector(std::size_t dim) const;
    static LieElement from_vector(int n, Epsilon eps, const std::vector<Rational>& v);

private:
    void require_same(const LieElement& o) const;

    int n_;
    Epsilon eps_;
    std::map<std::size_t, Rational> coeffs_;
};

/// [a,b,num,den] quadruples (1-based indices) in basis order.
nlohmann::json to_json(const AlgebraContext& ctx, const LieElement& x);
std::string to_string(const AlgebraContext& ctx, const LieElement& x);

struct Metric {
    Matrix lower; // g_ab
    Matrix upper; // g^ab
};

Metric metric(const AlgebraContext& ctx);

/// The invariant form K = [[0, I], [eps I, 0]] with g = K^{-1}.
Matrix invariant_form(const AlgebraContext& ctx);

/// Defining representation of S_ab: sum_l (g_al e_lb - g_lb e_la).
Matrix generator_matrix(const AlgebraContext& ctx, int a, int b);
Matrix defining_matrix(const AlgebraContext& ctx, const LieElement& x);

/// Unified bracket [S_ab, S_cd] = g_cb S_ad + g_da S_bc - g_ac S_bd - g_bd S_ac, bilinearly extended.
LieElement commutator(const AlgebraContext& ctx, const LieElement& x, const LieElement& y);

/// Coordinates of a 2n x 2n matrix in the generator basis, computed by an
/// exact linear solve against the defining matrices; nullopt if the matrix
/// does not lie in the algebra.
class MatrixDecomposer {
public:
    explicit MatrixDecomposer(const AlgebraContext& ctx);
    std::optional<LieElement> decompose(const Matrix& m) const;

private:
    AlgebraContext ctx_;
    Matrix basis_columns_; // (2n)^2 x dim
    Matrix left_inverse_;  // dim x (2n)^2
};

enum class Block { A, B, C };

/// Block dictionary: A_ij = S_{i+n,j}, B_ij = S_{i+n,j+n}, C_ij = -eps S_ij.
LieElement block_element(const AlgebraContext& ctx, Block block, int i, int j);

struct BlockView {
    int n;
    std::vector<LieElement> A, B, C; // row-major n x n
    const LieElement& at(Block block, int i, int j) const;
};

BlockView block_view(const AlgebraContext& ctx);

/// Exhaustive bracket checks: unified relation against matrix commutators,
/// the five block relation families, and antisymmetry.
Report verify_closure(const AlgebraContext& ctx);

/// Jacobi identity on every basis triple.
CheckRecord verify_jacobi(const AlgebraContext& ctx);

/// Matrix of ad(x) in the generator basis.
Matrix adjoint_matrix(const AlgebraContext& ctx, const LieElement& x);

/// Killing form normalization: tr(ad S_ab ad S_cd) = kappa (g_ad g_cb - g_ac g_bd)
/// with kappa = 4(n - eps), as fixed by the trace computation.
Rational killing_constant(const AlgebraContext& ctx);

Rational killing_form(const AlgebraContext& ctx, const LieElement& x, const LieElement& y);

/// tr(ad x ad y) from explicit adjoint matrices.
Rational killing_trace(const AlgebraContext& ctx, const LieElement& x, const LieElement& y);

Matrix killing_gram(const AlgebraContext& ctx);

/// Dual basis with killing_form(basis_i, dual_j) = delta_ij.
std::vector<LieElement> dual_basis(const AlgebraContext& ctx);
LieElement dual_element(const AlgebraContext& ctx, int a, int b);

/// Closed form vs trace oracle on every basis pair, the printed 8n
/// normalization as a recorded comparison, and the dual pairing.
Report verify_killing(const AlgebraContext& ctx);

} // namespace lieid
