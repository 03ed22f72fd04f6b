#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "veesys/rational.hpp"

namespace veesys {

using Vector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), data_(rows * cols)
	{}
	Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

	static Matrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vector row(std::size_t r) const;
	Matrix transposed() const;

	bool operator==(const Matrix &other) const = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Rational> data_;
};

// Deterministic total order (dimensions first, then entries row-major);
// used for canonical plane keys and report ordering.
bool lex_less(const Matrix &a, const Matrix &b);

struct MatrixLess {
	bool operator()(const Matrix &a, const Matrix &b) const { return lex_less(a, b); }
};

Matrix operator*(const Matrix &a, const Matrix &b);
Vector operator*(const Matrix &m, const Vector &v);
Matrix operator*(const Rational &s, const Matrix &m);
Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);

Rational dot(const Vector &a, const Vector &b);
Vector scaled(const Vector &v, const Rational &s);
Vector add(const Vector &a, const Vector &b);
Vector sub(const Vector &a, const Vector &b);
bool is_zero_vector(const Vector &v);

/// Stacks rows of `a` on top of rows of `b` (must agree in column count).
Matrix vstack(const Matrix &a, const Matrix &b);
Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);

/// Reduced row echelon form; idempotent, row space preserved.
Matrix rref(const Matrix &m);
Matrix rref(const Matrix &m, std::vector<std::size_t> &pivots_out);
std::size_t rank(const Matrix &m);

/// Membership of v in the row space of an rref matrix with the given
/// pivot columns. No allocations beyond one working copy of v.
bool in_rowspace(const Matrix &rref_m, const std::vector<std::size_t> &pivots,
                 const Vector &v);
Rational det(const Matrix &m);
bool is_symmetric(const Matrix &m);

/// Exact inverse of a square nonsingular matrix; throws SingularMatrixError.
Matrix invert(const Matrix &m);

/// Exact solution of a·x = b for square nonsingular a; throws SingularMatrixError.
Vector solve(const Matrix &a, const Vector &b);

/// Basis of the right null space; empty iff full column rank.
std::vector<Vector> kernel_basis(const Matrix &m);

/// Coordinates of v in the row space of `basis` (rows independent), or
/// an empty optional-like flag via bool return; writes into `coords`.
bool coordinates_in_rowspace(const Matrix &basis, const Vector &v, Vector &coords);

} // namespace veesys
