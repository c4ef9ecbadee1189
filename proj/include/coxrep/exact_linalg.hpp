#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace coxrep {

/// Dense row-major matrix over the rationals. Zero rows or columns are
/// legal; an r x 0 matrix is the unique map out of the zero space.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row, std::size_t col, const RationalMatrix& m);

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const mpq_class& scalar);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(RationalMatrix a, const mpq_class& s) { return a *= s; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

RationalMatrix hstack(const std::vector<RationalMatrix>& blocks, std::size_t rows);
RationalMatrix vstack(const std::vector<RationalMatrix>& blocks, std::size_t cols);
RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks);

/// Exact rank.
std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of the null space (cols x nullity). Each column is
/// a primitive integer vector whose first nonzero free coordinate is positive.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// (rows - rank) x rows matrix P of full row rank with P * m == 0; it maps
/// the codomain onto a complement of the column space.
RationalMatrix cokernel_projection(const RationalMatrix& m);

/// Solutions of A X = B: X = particular + nullspace * T for arbitrary T.
struct AffineSolution {
  RationalMatrix particular;
  RationalMatrix nullspace;
};

/// Throws NoSolution when inconsistent and ShapeMismatch on bad shapes.
AffineSolution solve_all(const RationalMatrix& a, const RationalMatrix& b);

/// Rational polynomial, coefficient of x^k at index k.
using RationalPolynomial = std::vector<mpq_class>;

/// det(x I - m), monic of degree rows().
RationalPolynomial characteristic_polynomial(const RationalMatrix& m);
RationalMatrix evaluate_polynomial(const RationalPolynomial& p, const RationalMatrix& m);

/// Row-major entries as canonical "p/q" strings.
nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace coxrep
