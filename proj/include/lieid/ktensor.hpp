#pragma once

// Recursive operator tensors ^mK^a_b, ^mK^{ab}, ^mK_ab built from the
// quadratic generators E^a_b, E_0^{ab}, E^0_ab by anticommutators.
// The recursion is generic over the operator type: Fock operators for
// realizations, UElement words for identities in the free algebra.

#include "lieid/algebra.hpp"
#include "lieid/fock.hpp"
#include "lieid/report.hpp"
#include "lieid/uelement.hpp"

#include <vector>

namespace lieid {

template <class Op>
struct KGenerators {
    int n;
    int eps;
    Op unit;
    std::vector<Op> mixed; // E^a_b, row-major n x n
    std::vector<Op> upper; // E_0^{ab}
    std::vector<Op> lower; // E^0_ab
};

template <class Op>
struct KTensorSet {
    int m;
    int n;
    std::vector<Op> mixed; // ^mK^a_b
    std::vector<Op> upper; // ^mK^{ab}
    std::vector<Op> lower; // ^mK_ab

    const Op& k_mixed(int a, int b) const { return mixed[static_cast<std::size_t>(a * n + b)]; }
    const Op& k_upper(int a, int b) const { return upper[static_cast<std::size_t>(a * n + b)]; }
    const Op& k_lower(int a, int b) const { return lower[static_cast<std::size_t>(a * n + b)]; }
};

KGenerators<FockOperator> fock_generators(const FockSpace& space);
/// E^i_j = A_ij, E_0^{ij} = B_ij, E^0_ij = -C_ij as degree-1 words.
KGenerators<UElement> word_generators(const AlgebraContext& ctx);

/// m = 0: mixed = d_ab, upper = lower = 0.
template <class Op>
KTensorSet<Op> k_base0(const KGenerators<Op>& g)
{
    KTensorSet<Op> k{0, g.n, {}, {}, {}};
    const Op zero = g.unit * Rational(0);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            k.mixed.push_back(a == b ? g.unit : zero);
            k.upper.push_back(zero);
            k.lower.push_back(zero);
        }
    return k;
}

/// m = 1: the generators themselves.
template <class Op>
KTensorSet<Op> k_base1(const KGenerators<Op>& g)
{
    return {1, g.n, g.mixed, g.upper, g.lower};
}

/// One step of the recursion (sums over t = 1..n):
///   K'^a_b  = 1/4 ({K^a_t, E^t_b} + {K^t_b, E^a_t} + {K^{at}, E^0_tb} + {K_bt, E_0^{ta}})
///   K'^{ab} = 1/4 ({K^a_t, E_0^{tb}} - eps(-1)^m {K^b_t, E_0^{ta}} - {K^{at}, E^b_t} + {K^{tb}, E^a_t})
///   K'_ab   = 1/4 ({K^t_a, E^0_tb} - eps(-1)^m {K^t_b, E^0_ta} - {K_at, E^t_b} + {K_tb, E^t_a})
template <class Op>
KTensorSet<Op> k_step(const KTensorSet<Op>& k, const KGenerators<Op>& g)
{
    const int n = g.n;
    const Rational quarter(1, 4);
    const Rational sign(k.m % 2 == 0 ? -g.eps : g.eps); // -eps(-1)^m
    auto E = [&](const std::vector<Op>& v, int a, int b) -> const Op& { return v[static_cast<std::size_t>(a * n + b)]; };
    auto anti = [](const Op& x, const Op& y) { return x * y + y * x; };
    KTensorSet<Op> out{k.m + 1, n, {}, {}, {}};
    const Op zero = g.unit * Rational(0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Op mixed = zero, upper = zero, lower = zero;
            for (int t = 0; t < n; ++t) {
                mixed += anti(k.k_mixed(a, t), E(g.mixed, t, b)) + anti(k.k_mixed(t, b), E(g.mixed, a, t)) +
                         anti(k.k_upper(a, t), E(g.lower, t, b)) + anti(k.k_lower(b, t), E(g.upper, t, a));
                upper += anti(k.k_mixed(a, t), E(g.upper, t, b)) + sign * anti(k.k_mixed(b, t), E(g.upper, t, a)) -
                         anti(k.k_upper(a, t), E(g.mixed, b, t)) + anti(k.k_upper(t, b), E(g.mixed, a, t));
                lower += anti(k.k_mixed(t, a), E(g.lower, t, b)) + sign * anti(k.k_mixed(t, b), E(g.lower, t, a)) -
                         anti(k.k_lower(a, t), E(g.mixed, t, b)) + anti(k.k_lower(t, b), E(g.mixed, t, a));
            }
            out.mixed.push_back(quarter * mixed);
            out.upper.push_back(quarter * upper);
            out.lower.push_back(quarter * lower);
        }
    return out;
}

/// Sets for m = 0 .. m_max.
template <class Op>
std::vector<KTensorSet<Op>> k_sequence(const KGenerators<Op>& g, int m_max)
{
    std::vector<KTensorSet<Op>> seq{k_base0(g)};
    if (m_max >= 1) seq.push_back(k_base1(g));
    while (static_cast<int>(seq.size()) <= m_max) seq.push_back(k_step(seq.back(), g));
    return seq;
}

/// ^mK^{ab} = s ^mK^{ba}, ^mK_ab = s ^mK_ba with s = eps for even m, -eps for odd m.
CheckRecord verify_symmetry(const KTensorSet<FockOperator>& k, const std::vector<OccState>& family,
                            const nlohmann::json& params);

/// Base step, parity laws for m <= m_max, second-order forms (check "hnn-recursion").
Report verify_recursion(const AlgebraContext& ctx, int m_max, int d_check);

/// Second-degree constraints on the fermionic realization (check "constraints").
/// ctx must be orthogonal; symplectic contexts give a skipped record.
Report verify_kinematical_constraints(const AlgebraContext& ctx);

/// The U(L) identities evaluated in the Fock realization (check "identities").
Report verify_annihilators(const AlgebraContext& ctx, int d_check);

} // namespace lieid
