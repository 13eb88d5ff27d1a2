#pragma once

#include "lieid/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lieid {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Rational> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rational> v);

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::vector<Rational> apply(std::span<const Rational> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Some solution x of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, std::span<const Rational> b);

/// Matrix whose columns are the given vectors.
Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t dim);

bool is_zero(std::span<const Rational> v);

} // namespace lieid
