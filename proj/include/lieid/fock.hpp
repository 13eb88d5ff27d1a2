#pragma once

// Fock spaces of n fermionic (eps = +1) or bosonic (eps = -1) modes and
// operators kept in normal-ordered form.
//
// Conventions: fermionic b_i and b_i^+ carry the sign (-1)^(occ_1 + ... + occ_{i-1});
// bosons use b^+|k> = |k+1>, b|k> = k|k-1> so every coefficient stays rational.

#include "lieid/algebra.hpp"
#include "lieid/rational.hpp"
#include "lieid/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lieid {

enum class Statistics { fermionic, bosonic };

Statistics statistics_for(Epsilon eps);
int sign_of(Statistics s); // +1 fermionic, -1 bosonic (the matching eps)

using OccState = std::vector<int>;

class FockVector {
public:
    using Terms = std::map<OccState, Rational>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const OccState& s, const Rational& c);

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend bool operator==(const FockVector&, const FockVector&) = default;

    static FockVector basis(const OccState& s);

private:
    Terms terms_;
};

/// {"1,0": [num, den], ...} with occupation lists as keys.
nlohmann::json to_json(const FockVector& v);
std::string to_string(const OccState& s);

class FockSpace {
public:
    FockSpace(int modes, Statistics stats);

    int modes() const { return modes_; }
    Statistics stats() const { return stats_; }
    int eps() const { return sign_of(stats_); }
    bool is_valid(const OccState& s) const;

    /// Fermionic: all 2^n states. Bosonic: all states of total occupation <= max_degree.
    std::vector<OccState> states(int max_degree) const;

    friend bool operator==(const FockSpace&, const FockSpace&) = default;

private:
    int modes_;
    Statistics stats_;
};

/// Finite sum of normal-ordered monomials
///   prod_i (b_i^+)^{c_i} prod_i (b_i)^{a_i}
/// (creators first, then annihilators, each in ascending mode order).
class FockOperator {
public:
    /// Exponents: creators for modes 0..n-1, then annihilators.
    using Key = std::vector<std::uint8_t>;
    using Terms = std::map<Key, Rational>;

    explicit FockOperator(const FockSpace& space) : space_(space) {}

    static FockOperator identity(const FockSpace& space, const Rational& c = Rational(1));
    static FockOperator creation(const FockSpace& space, int mode);
    static FockOperator annihilation(const FockSpace& space, int mode);

    const FockSpace& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// c when the operator is c * Id.
    std::optional<Rational> as_scalar() const;

    void add_term(const Key& k, const Rational& c);

    FockOperator& operator+=(const FockOperator& o);
    FockOperator& operator-=(const FockOperator& o);
    FockOperator& operator*=(const Rational& s);
    friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
    friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
    friend FockOperator operator*(FockOperator a, const Rational& s) { return a *= s; }
    friend FockOperator operator*(const Rational& s, FockOperator a) { return a *= s; }
    friend FockOperator operator-(FockOperator a) { return a *= Rational(-1); }
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend bool operator==(const FockOperator&, const FockOperator&) = default;

    FockVector apply(const FockVector& v) const;
    FockVector apply(const OccState& s) const;

    /// Change of total occupation of each term.
    std::set<int> grades() const;
    int max_grade_shift() const;
    bool preserves_parity() const;

    std::string to_string() const;

private:
    void require_same(const FockOperator& o) const;

    FockSpace space_;
    Terms terms_;
};

/// x y + y x
FockOperator anticommutator(const FockOperator& x, const FockOperator& y);
/// x y - y x
FockOperator commutator(const FockOperator& x, const FockOperator& y);
/// x y + eps y x
FockOperator graded_commutator(const FockOperator& x, const FockOperator& y, int eps);

enum class HnnKind {
    mixed,   // E^i_j = b_i^+ b_j - (eps/2) d_ij
    raising, // E_0^{ij} = b_i^+ b_j^+
    lowering // E^0_ij = eps b_i b_j
};

FockOperator hnn_generator(const FockSpace& space, HnnKind kind, int i, int j);

/// A_ij = E^i_j, B_ij = E_0^{ij}, C_ij = -E^0_ij composed with the block dictionary.
/// Throws std::invalid_argument when the statistics do not match ctx.eps().
FockOperator realize(const FockSpace& space, const AlgebraContext& ctx, const LieElement& x);
std::vector<FockOperator> realize_basis(const FockSpace& space, const AlgebraContext& ctx);

struct EqualityResult {
    bool equal = true;
    bool normal_forms_equal = true;
    std::size_t states_checked = 0;
    int max_degree = -1;  // largest total occupation in the family
    int grade_shift = 0;  // largest |grade| of the difference
    std::string witness;  // first state with a nonzero difference
    std::string residual; // image of the witness under the difference

    std::string scope() const;
};

/// Coefficient comparison of normal forms plus application of the difference
/// to every state of the family.
EqualityResult operator_equal(const FockOperator& a, const FockOperator& b, const std::vector<OccState>& family);

/// Canonical relations, generator forms, homomorphism, block relations, parity.
Report verify_fock(const AlgebraContext& ctx, int d_check);

} // namespace lieid
