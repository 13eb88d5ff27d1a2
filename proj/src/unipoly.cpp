#include "lieid/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace lieid {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& root) { return UniPoly({-root, Rational(1)}); }

void UniPoly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const
{
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= inv;
    return UniPoly(std::move(v));
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix UniPoly::operator()(const Matrix& m) const
{
    if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
    Matrix acc(m.rows(), m.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        bool unit = (mag == 1);
        if (!unit || k == 0) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Rational f = r[static_cast<std::size_t>(k)] * inv;
        if (sgn(f) == 0) continue;
        q[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    return divmod(a * b, gcd(a, b)).quotient.monic();
}

NonRationalSpectrum::NonRationalSpectrum(UniPoly residual_factor)
    : std::runtime_error("non-rational spectrum: irreducible factor " + residual_factor.to_string()),
      factor_(std::move(residual_factor))
{
}

namespace {

std::vector<Integer> positive_divisors(Integer v)
{
    v = abs(v);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        Integer other = v / d;
        if (other != d) large.push_back(other);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly& p)
{
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<Rational> roots;
    UniPoly rest = p.monic();
    if (sgn(rest.coeff(0)) == 0) {
        roots.push_back(0);
        while (rest.degree() > 0 && sgn(rest.coeff(0)) == 0) rest = divmod(rest, UniPoly::linear(0)).quotient;
    }
    while (rest.degree() > 0) {
        // Primitive integer form: roots p/q have p | a_0 and q | a_lead.
        Integer den = 1;
        for (const auto& c : rest.coeffs()) {
            Integer d = c.get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
        Integer a0 = Rational(rest.coeff(0) * den).get_num();
        Integer an = Rational(rest.leading() * den).get_num();
        bool found = false;
        for (const auto& num : positive_divisors(a0)) {
            for (const auto& d : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    Rational cand(num * s, d);
                    cand.canonicalize();
                    if (sgn(rest(cand)) != 0) continue;
                    roots.push_back(cand);
                    while (rest.degree() > 0 && sgn(rest(cand)) == 0) rest = divmod(rest, UniPoly::linear(cand)).quotient;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw NonRationalSpectrum(rest);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Local minimal polynomial of v under op: first linear dependency in the Krylov sequence.
UniPoly local_minimal_polynomial(const Matrix& op, std::vector<Rational> v)
{
    std::vector<std::vector<Rational>> krylov;
    krylov.push_back(v);
    for (std::size_t k = 1; k <= op.rows(); ++k) {
        v = op.apply(v);
        Matrix basis = from_columns(krylov, op.rows());
        if (auto x = solve(basis, v)) {
            std::vector<Rational> c(k + 1);
            for (std::size_t i = 0; i < k; ++i) c[i] = -(*x)[i];
            c[k] = 1;
            return UniPoly(std::move(c));
        }
        krylov.push_back(v);
    }
    throw std::logic_error("Krylov sequence did not terminate");
}

} // namespace

UniPoly minimal_polynomial(const Matrix& op)
{
    if (!op.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
    UniPoly acc = UniPoly::constant(1);
    Matrix acc_at_op = Matrix::identity(op.rows());
    for (std::size_t j = 0; j < op.rows(); ++j) {
        std::vector<Rational> w = acc_at_op.column(j);
        if (is_zero(w)) continue;
        UniPoly q = local_minimal_polynomial(op, std::move(w));
        acc = acc * q;
        acc_at_op = q(op) * acc_at_op;
    }
    return acc.monic();
}

} // namespace lieid
