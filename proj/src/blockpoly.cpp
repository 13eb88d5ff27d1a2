#include "lieid/blockpoly.hpp"

#include <stdexcept>

namespace lieid {

PolyMatrix PolyMatrix::scalar(std::size_t n, const Poly& p)
{
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

Poly PolyMatrix::trace() const
{
    Poly t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const
{
    PolyMatrix b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& s)
{
    for (auto& p : data_) p *= s;
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix shape mismatch");
    PolyMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

BlockSymbols::BlockSymbols(int n, Epsilon eps)
    : n_(n), eps_(eps), b_index_(static_cast<std::size_t>(n * n), -1), c_index_(static_cast<std::size_t>(n * n), -1)
{
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tags_.push_back({Block::A, i, j});
    auto independent = [&](int i, int j) { return eps.is_orthogonal() ? i < j : i <= j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (independent(i, j)) {
                b_index_[static_cast<std::size_t>(i * n + j)] = static_cast<int>(tags_.size());
                tags_.push_back({Block::B, i, j});
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (independent(i, j)) {
                c_index_[static_cast<std::size_t>(i * n + j)] = static_cast<int>(tags_.size());
                tags_.push_back({Block::C, i, j});
            }
}

Poly BlockSymbols::symbol(Block block, int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("block symbol index");
    if (block == Block::A) return Poly::symbol(static_cast<Symbol>(i * n_ + j));
    const auto& table = block == Block::B ? b_index_ : c_index_;
    int direct = table[static_cast<std::size_t>(i * n_ + j)];
    if (direct >= 0) return Poly::symbol(static_cast<Symbol>(direct));
    int swapped = table[static_cast<std::size_t>(j * n_ + i)];
    if (swapped >= 0) return Poly::symbol(static_cast<Symbol>(swapped), Rational(-eps_.value()));
    return {};
}

PolyMatrix BlockSymbols::matrix(Block block) const
{
    PolyMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = symbol(block, i, j);
    return m;
}

std::string BlockSymbols::name(Symbol s) const
{
    const Tag& t = tag(s);
    const char letter = t.block == Block::A ? 'A' : t.block == Block::B ? 'B' : 'C';
    return std::string(1, letter) + std::to_string(t.i + 1) + (n_ > 9 ? "," : "") + std::to_string(t.j + 1);
}

SymbolNamer BlockSymbols::namer() const
{
    return [this](Symbol s) { return name(s); };
}

Poly BlockSymbols::generator_image(const AlgebraContext& ctx, Symbol basis_index) const
{
    const auto [a, b] = ctx.basis().at(basis_index);
    const int n = n_;
    const Rational me(-eps_.value());
    if (a >= n && b < n) return symbol(Block::A, a - n, b);
    if (a >= n && b >= n) return symbol(Block::B, a - n, b - n);
    if (a < n && b < n) return symbol(Block::C, a, b) * me;
    return symbol(Block::A, b - n, a) * me;
}

Poly BlockSymbols::from_generators(const AlgebraContext& ctx, const Poly& p) const
{
    if (ctx.n() != n_ || ctx.eps() != eps_) throw std::invalid_argument("block symbols built for another algebra");
    return p.substitute([&](Symbol s) { return generator_image(ctx, s); });
}

nlohmann::json BlockSymbols::to_json(const Poly& p) const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json syms = nlohmann::json::array();
        for (Symbol s : m) {
            const Tag& t = tag(s);
            const char* fam = t.block == Block::A ? "A" : t.block == Block::B ? "B" : "C";
            syms.push_back({fam, t.i + 1, t.j + 1});
        }
        out.push_back({c.get_str(), syms});
    }
    return out;
}

} // namespace lieid
