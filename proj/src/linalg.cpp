#include "veesys/linalg.hpp"

#include <cassert>

#include "veesys/errors.hpp"

namespace veesys {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
	rows_ = rows.size();
	cols_ = rows_ ? rows.begin()->size() : 0;
	data_.reserve(rows_ * cols_);
	for (const auto &r : rows) {
		assert(r.size() == cols_);
		for (const auto &x : r)
			data_.push_back(x);
	}
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	Vector v(cols_);
	for (std::size_t c = 0; c < cols_; ++c)
		v[c] = (*this)(r, c);
	return v;
}

Matrix Matrix::transposed() const
{
	Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool lex_less(const Matrix &a, const Matrix &b)
{
	if (a.rows() != b.rows())
		return a.rows() < b.rows();
	if (a.cols() != b.cols())
		return a.cols() < b.cols();
	for (std::size_t r = 0; r < a.rows(); ++r)
		for (std::size_t c = 0; c < a.cols(); ++c) {
			int s = cmp(a(r, c), b(r, c));
			if (s != 0)
				return s < 0;
		}
	return false;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
	assert(a.cols() == b.rows());
	Matrix out(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k) {
			if (is_zero(a(i, k)))
				continue;
			for (std::size_t j = 0; j < b.cols(); ++j)
				out(i, j) += a(i, k) * b(k, j);
		}
	return out;
}

Vector operator*(const Matrix &m, const Vector &v)
{
	assert(m.cols() == v.size());
	Vector out(m.rows());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			out[i] += m(i, j) * v[j];
	return out;
}

Matrix operator*(const Rational &s, const Matrix &m)
{
	Matrix out(m.rows(), m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			out(i, j) = s * m(i, j);
	return out;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
	assert(a.rows() == b.rows() && a.cols() == b.cols());
	Matrix out(a.rows(), a.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			out(i, j) = a(i, j) + b(i, j);
	return out;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
	assert(a.rows() == b.rows() && a.cols() == b.cols());
	Matrix out(a.rows(), a.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			out(i, j) = a(i, j) - b(i, j);
	return out;
}

Rational dot(const Vector &a, const Vector &b)
{
	assert(a.size() == b.size());
	Rational s = 0;
	for (std::size_t i = 0; i < a.size(); ++i)
		s += a[i] * b[i];
	return s;
}

Vector scaled(const Vector &v, const Rational &s)
{
	Vector out(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		out[i] = v[i] * s;
	return out;
}

Vector add(const Vector &a, const Vector &b)
{
	assert(a.size() == b.size());
	Vector out(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		out[i] = a[i] + b[i];
	return out;
}

Vector sub(const Vector &a, const Vector &b)
{
	assert(a.size() == b.size());
	Vector out(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		out[i] = a[i] - b[i];
	return out;
}

bool is_zero_vector(const Vector &v)
{
	for (const auto &x : v)
		if (!is_zero(x))
			return false;
	return true;
}

Matrix vstack(const Matrix &a, const Matrix &b)
{
	assert(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0);
	std::size_t cols = a.rows() ? a.cols() : b.cols();
	Matrix out(a.rows() + b.rows(), cols);
	for (std::size_t r = 0; r < a.rows(); ++r)
		for (std::size_t c = 0; c < cols; ++c)
			out(r, c) = a(r, c);
	for (std::size_t r = 0; r < b.rows(); ++r)
		for (std::size_t c = 0; c < cols; ++c)
			out(a.rows() + r, c) = b(r, c);
	return out;
}

Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols)
{
	Matrix out(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		assert(rows[r].size() == cols);
		for (std::size_t c = 0; c < cols; ++c)
			out(r, c) = rows[r][c];
	}
	return out;
}

namespace {

// In-place forward elimination to rref; first nonzero pivot in each column.
// Returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix &m)
{
	std::vector<std::size_t> pivots;
	std::size_t lead = 0;
	for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
		std::size_t pivot = lead;
		while (pivot < m.rows() && is_zero(m(pivot, col)))
			++pivot;
		if (pivot == m.rows())
			continue;
		if (pivot != lead)
			for (std::size_t c = 0; c < m.cols(); ++c)
				swap(m(pivot, c), m(lead, c));
		Rational inv = 1 / m(lead, col);
		for (std::size_t c = col; c < m.cols(); ++c)
			m(lead, c) *= inv;
		for (std::size_t r = 0; r < m.rows(); ++r) {
			if (r == lead || is_zero(m(r, col)))
				continue;
			Rational f = m(r, col);
			for (std::size_t c = col; c < m.cols(); ++c)
				m(r, c) -= f * m(lead, c);
		}
		pivots.push_back(col);
		++lead;
	}
	return pivots;
}

} // namespace

Matrix rref(const Matrix &m)
{
	Matrix out = m;
	rref_in_place(out);
	return out;
}

Matrix rref(const Matrix &m, std::vector<std::size_t> &pivots_out)
{
	Matrix out = m;
	pivots_out = rref_in_place(out);
	return out;
}

bool in_rowspace(const Matrix &rref_m, const std::vector<std::size_t> &pivots,
                 const Vector &v)
{
	assert(rref_m.cols() == v.size());
	Vector work = v;
	for (std::size_t r = 0; r < pivots.size(); ++r) {
		const Rational &coeff = work[pivots[r]];
		if (is_zero(coeff))
			continue;
		Rational f = coeff;
		for (std::size_t c = pivots[r]; c < rref_m.cols(); ++c)
			if (!is_zero(rref_m(r, c)))
				work[c] -= f * rref_m(r, c);
	}
	return is_zero_vector(work);
}

std::size_t rank(const Matrix &m)
{
	Matrix tmp = m;
	return rref_in_place(tmp).size();
}

Rational det(const Matrix &m)
{
	assert(m.rows() == m.cols());
	Matrix a = m;
	std::size_t n = a.rows();
	Rational d = 1;
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t pivot = col;
		while (pivot < n && is_zero(a(pivot, col)))
			++pivot;
		if (pivot == n)
			return Rational(0);
		if (pivot != col) {
			for (std::size_t c = 0; c < n; ++c)
				swap(a(pivot, c), a(col, c));
			d = -d;
		}
		d *= a(col, col);
		Rational inv = 1 / a(col, col);
		for (std::size_t r = col + 1; r < n; ++r) {
			if (is_zero(a(r, col)))
				continue;
			Rational f = a(r, col) * inv;
			for (std::size_t c = col; c < n; ++c)
				a(r, c) -= f * a(col, c);
		}
	}
	return d;
}

bool is_symmetric(const Matrix &m)
{
	if (m.rows() != m.cols())
		return false;
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = r + 1; c < m.cols(); ++c)
			if (m(r, c) != m(c, r))
				return false;
	return true;
}

Matrix invert(const Matrix &m)
{
	assert(m.rows() == m.cols());
	std::size_t n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	auto pivots = rref_in_place(aug);
	if (pivots.size() != n || pivots.back() != n - 1)
		throw SingularMatrixError();
	Matrix out(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			out(r, c) = aug(r, n + c);
	return out;
}

Vector solve(const Matrix &a, const Vector &b)
{
	assert(a.rows() == a.cols() && a.rows() == b.size());
	std::size_t n = a.rows();
	Matrix aug(n, n + 1);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = a(r, c);
		aug(r, n) = b[r];
	}
	auto pivots = rref_in_place(aug);
	if (pivots.size() != n || pivots.back() != n - 1)
		throw SingularMatrixError();
	Vector x(n);
	for (std::size_t r = 0; r < n; ++r)
		x[r] = aug(r, n);
	return x;
}

std::vector<Vector> kernel_basis(const Matrix &m)
{
	Matrix r = m;
	auto pivots = rref_in_place(r);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
		if (is_pivot[free_col])
			continue;
		Vector v(m.cols());
		v[free_col] = 1;
		for (std::size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = -r(i, free_col);
		basis.push_back(std::move(v));
	}
	return basis;
}

bool coordinates_in_rowspace(const Matrix &basis, const Vector &v, Vector &coords)
{
	assert(basis.cols() == v.size());
	std::size_t k = basis.rows();
	std::size_t n = basis.cols();
	// Solve cᵀ·basis = v by eliminating the (n × k) transposed system.
	Matrix aug(n, k + 1);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < k; ++c)
			aug(r, c) = basis(c, r);
		aug(r, k) = v[r];
	}
	auto pivots = rref_in_place(aug);
	coords.assign(k, Rational(0));
	for (std::size_t i = 0; i < pivots.size(); ++i) {
		if (pivots[i] == k)
			return false; // inconsistent: v not in the row space
		coords[pivots[i]] = aug(i, k);
	}
	return true;
}

} // namespace veesys
