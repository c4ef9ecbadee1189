#include "coxrep/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "coxrep/error.hpp"

namespace coxrep {

namespace {

using IntRow = std::vector<mpz_class>;

// Reduced row echelon form over the integers. Every nonzero row is primitive
// and, within the first `pivot_limit` columns, each pivot column is zero
// outside its pivot row.
struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
};

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (auto& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

IntRow integer_row(const RationalMatrix& m, std::size_t r) {
  mpz_class denom = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& q = m(r, c);
    if (q != 0) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& q = m(r, c);
    if (q == 0) continue;
    row[c] = q.get_num() * (denom / q.get_den());
  }
  make_primitive(row);
  return row;
}

// Fraction-free Gauss-Jordan: row_i <- (p/g) row_i - (a/g) row_k, followed by
// removal of the row content. Rows with a zero in the pivot column are never
// touched, so sparse systems stay sparse.
Echelon reduce(const RationalMatrix& m, std::size_t pivot_limit) {
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(integer_row(m, r));
  const std::size_t ncols = m.cols();
  std::size_t rank = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < pivot_limit && rank < e.rows.size(); ++c) {
    std::size_t best = e.rows.size();
    for (std::size_t r = rank; r < e.rows.size(); ++r) {
      const auto& x = e.rows[r][c];
      if (x == 0) continue;
      if (best == e.rows.size() || mpz_cmpabs(x.get_mpz_t(), e.rows[best][c].get_mpz_t()) < 0) best = r;
    }
    if (best == e.rows.size()) continue;
    std::swap(e.rows[rank], e.rows[best]);
    if (e.rows[rank][c] < 0) {
      for (auto& x : e.rows[rank]) x = -x;
    }
    const IntRow& pivot_row = e.rows[rank];
    const mpz_class& p = pivot_row[c];
    support.clear();
    for (std::size_t j = 0; j < ncols; ++j) {
      if (pivot_row[j] != 0) support.push_back(j);
    }
    mpz_class g;
    mpz_class scale_row;
    mpz_class scale_pivot;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r == rank) continue;
      IntRow& row = e.rows[r];
      if (row[c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), row[c].get_mpz_t());
      scale_row = p / g;
      scale_pivot = row[c] / g;
      if (scale_row != 1) {
        for (auto& x : row) {
          if (x != 0) x *= scale_row;
        }
      }
      for (std::size_t j : support) row[j] -= scale_pivot * pivot_row[j];
      make_primitive(row);
    }
    e.pivot_cols.push_back(c);
    ++rank;
  }
  return e;
}

// Null space of the first `ncols` columns of a reduced echelon form.
RationalMatrix kernel_from_echelon(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  RationalMatrix out(ncols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    mpz_class scale = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (e.rows[r][f] != 0) {
        const auto& p = e.rows[r][e.pivot_cols[r]];
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.get_mpz_t());
      }
    }
    IntRow v(ncols);
    v[f] = scale;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      const auto& a = e.rows[r][f];
      if (a == 0) continue;
      const auto& p = e.rows[r][e.pivot_cols[r]];
      v[e.pivot_cols[r]] = -(a * (scale / p));
    }
    make_primitive(v);
    for (std::size_t c = 0; c < ncols; ++c) out(c, k) = v[c];
  }
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return x == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  RationalMatrix out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(row + r, col + c);
  }
  return out;
}

void RationalMatrix::set_block(std::size_t row, std::size_t col, const RationalMatrix& m) {
  if (row + m.rows() > rows_ || col + m.cols() > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(row + r, col + c) = m(r, c);
  }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const mpq_class& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix hstack(const std::vector<RationalMatrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::ShapeMismatch, "hstack row count");
    cols += b.cols();
  }
  RationalMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    out.set_block(0, offset, b);
    offset += b.cols();
  }
  return out;
}

RationalMatrix vstack(const std::vector<RationalMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "vstack column count");
    rows += b.rows();
  }
  RationalMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    out.set_block(offset, 0, b);
    offset += b.rows();
  }
  return out;
}

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RationalMatrix out(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduce(m, m.cols()).pivot_cols.size(); }

RationalMatrix kernel_basis(const RationalMatrix& m) { return kernel_from_echelon(reduce(m, m.cols()), m.cols()); }

RationalMatrix cokernel_projection(const RationalMatrix& m) { return kernel_basis(m.transpose()).transpose(); }

AffineSolution solve_all(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_all: A and B row counts differ");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  const auto e = reduce(hstack({a, b}, a.rows()), n);
  const std::size_t rk = e.pivot_cols.size();
  for (std::size_t r = rk; r < e.rows.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      if (e.rows[r][n + j] != 0) throw Error(ErrorKind::NoSolution, "inconsistent linear system");
    }
  }
  AffineSolution out{RationalMatrix(n, k), kernel_from_echelon(e, n)};
  for (std::size_t r = 0; r < rk; ++r) {
    const auto pc = e.pivot_cols[r];
    const mpq_class p(e.rows[r][pc]);
    for (std::size_t j = 0; j < k; ++j) {
      if (e.rows[r][n + j] != 0) out.particular(pc, j) = mpq_class(e.rows[r][n + j]) / p;
    }
  }
  return out;
}

RationalPolynomial characteristic_polynomial(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier.
  const std::size_t n = m.rows();
  RationalPolynomial coeffs(n + 1);
  coeffs[n] = 1;
  RationalMatrix power(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = m * power;
    for (std::size_t i = 0; i < n; ++i) power(i, i) += coeffs[n - k + 1];
    const RationalMatrix am = m * power;
    mpq_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return coeffs;
}

RationalMatrix evaluate_polynomial(const RationalPolynomial& p, const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "polynomial of a non-square matrix");
  RationalMatrix acc(m.rows(), m.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

nlohmann::json to_json(const RationalMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m(r, c).get_str());
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw Error(ErrorKind::Parse, "matrix entry count does not match its shape");
    RationalMatrix out(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      mpq_class q;
      if (q.set_str(entries[i].get<std::string>(), 10) != 0) {
        throw Error(ErrorKind::Parse, "bad rational '" + entries[i].get<std::string>() + "'");
      }
      if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator");
      q.canonicalize();
      out(i / cols, i % cols) = q;
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace coxrep
