#pragma once

// Commuting block symbols A_ij, B_ij, C_ij (the classical counterpart of the
// block generators) and small matrices with polynomial entries.

#include "lieid/algebra.hpp"
#include "lieid/poly.hpp"

#include <string>
#include <vector>

namespace lieid {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix scalar(std::size_t n, const Poly& p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    PolyMatrix transpose() const;
    bool is_zero() const;
    Poly trace() const;

    /// Sub-block of size (rows x cols) starting at (r0, c0).
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m);

    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    PolyMatrix& operator*=(const Rational& s);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(PolyMatrix a, const Rational& s) { return a *= s; }
    friend PolyMatrix operator*(const Rational& s, PolyMatrix a) { return a *= s; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> data_;
};

/// Independent commuting symbols under B = -eps B^t, C = -eps C^t.
/// Symbol ids: all A_ij first, then the independent B_ij, then C_ij.
class BlockSymbols {
public:
    struct Tag {
        Block block;
        int i;
        int j;
    };

    BlockSymbols(int n, Epsilon eps);

    int n() const { return n_; }
    Epsilon eps() const { return eps_; }
    std::size_t count() const { return tags_.size(); }
    const Tag& tag(Symbol s) const { return tags_.at(s); }

    /// The symbol X_ij rewritten through the symmetry relations (zero for B_ii, C_ii when eps = +1).
    Poly symbol(Block block, int i, int j) const;
    PolyMatrix matrix(Block block) const;

    /// 1-based name such as "B12".
    std::string name(Symbol s) const;
    SymbolNamer namer() const;

    /// Substitute the block dictionary into a polynomial in generator-basis symbols:
    /// S_{i+n,j} = A_ij, S_{i+n,j+n} = B_ij, S_ij = -eps C_ij, S_{i,j+n} = -eps A_ji.
    Poly from_generators(const AlgebraContext& ctx, const Poly& p) const;
    Poly generator_image(const AlgebraContext& ctx, Symbol basis_index) const;

    nlohmann::json to_json(const Poly& p) const;

private:
    int n_;
    Epsilon eps_;
    std::vector<Tag> tags_;
    std::vector<int> b_index_; // n*n -> symbol id or -1
    std::vector<int> c_index_;
};

} // namespace lieid
