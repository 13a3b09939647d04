#include "fixsub/intlat.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fixsub {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Integer floor_mod(const Integer& x, const Integer& d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Working state for the Smith reduction: P * M * Q = A throughout.
struct SmithState {
  IntMatrix A, P, P_inv, Q, Q_inv;

  explicit SmithState(const IntMatrix& m)
      : A(m),
        P(IntMatrix::identity(m.rows())),
        P_inv(IntMatrix::identity(m.rows())),
        Q(IntMatrix::identity(m.cols())),
        Q_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
    for (std::size_t c = 0; c < P.cols(); ++c) std::swap(P.at(i, c), P.at(j, c));
    for (std::size_t r = 0; r < P_inv.rows(); ++r) std::swap(P_inv.at(r, i), P_inv.at(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
    for (std::size_t r = 0; r < Q.rows(); ++r) std::swap(Q.at(r, i), Q.at(r, j));
    for (std::size_t c = 0; c < Q_inv.cols(); ++c) std::swap(Q_inv.at(i, c), Q_inv.at(j, c));
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) += q * A.at(j, c);
    for (std::size_t c = 0; c < P.cols(); ++c) P.at(i, c) += q * P.at(j, c);
    for (std::size_t r = 0; r < P_inv.rows(); ++r) P_inv.at(r, j) -= q * P_inv.at(r, i);
  }
  // col j += q * col i
  void add_col(std::size_t j, std::size_t i, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < A.rows(); ++r) A.at(r, j) += q * A.at(r, i);
    for (std::size_t r = 0; r < Q.rows(); ++r) Q.at(r, j) += q * Q.at(r, i);
    for (std::size_t c = 0; c < Q_inv.cols(); ++c) Q_inv.at(i, c) -= q * Q_inv.at(j, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
    for (std::size_t c = 0; c < P.cols(); ++c) P.at(i, c) = -P.at(i, c);
    for (std::size_t r = 0; r < P_inv.rows(); ++r) P_inv.at(r, i) = -P_inv.at(r, i);
  }
};

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = -a.at(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  require(a.cols() == v.size(), "matrix-vector shape mismatch");
  IntVector out = zero_vector(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  require(a.size() == b.size(), "vector length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require(a.size() == b.size(), "vector length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.cols(), "stack_rows column mismatch");
  IntMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

IntVector SmithDecomposition::diagonal() const {
  std::size_t n = std::min(D.rows(), D.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D.at(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState st(m);
  IntMatrix& A = st.A;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;

  auto smallest_in = [&](auto&& range_rows, auto&& range_cols) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i : range_rows)
      for (std::size_t j : range_cols) {
        const Integer& x = A.at(i, j);
        if (x == 0) continue;
        if (!best || abs(x) < abs(A.at(best->first, best->second))) best = {{i, j}};
      }
    return best;
  };
  auto span_from = [](std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v;
    for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
    return v;
  };

  for (; t < std::min(rows, cols); ++t) {
    auto pivot = smallest_in(span_from(t, rows), span_from(t, cols));
    if (!pivot) break;
    st.swap_rows(t, pivot->first);
    st.swap_cols(t, pivot->second);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
        st.add_row(i, t, -q);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
        st.add_col(j, t, -q);
      }
      // Remainders left in row/column t: move the smallest to the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> rest;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (A.at(i, t) != 0 && (!rest || abs(A.at(i, t)) < abs(A.at(rest->first, rest->second))))
          rest = {{i, t}};
      for (std::size_t j = t + 1; j < cols; ++j)
        if (A.at(t, j) != 0 && (!rest || abs(A.at(t, j)) < abs(A.at(rest->first, rest->second))))
          rest = {{t, j}};
      if (rest) {
        st.swap_rows(t, rest->first);
        st.swap_cols(t, rest->second);
        continue;
      }
      // Divisibility: pull an offending row into row t and go again.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(A.at(i, j).get_mpz_t(), A.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (!bad) break;
      st.add_row(t, *bad, Integer(1));
    }
    if (A.at(t, t) < 0) st.negate_row(t);
  }

  SmithDecomposition out;
  out.rank = t;
  out.D = std::move(st.A);
  out.U = std::move(st.P_inv);
  out.U_inv = std::move(st.P);
  out.V = std::move(st.Q_inv);
  out.V_inv = std::move(st.Q);
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  std::vector<IntVector> out;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) out.push_back(snf.V_inv.column(j));
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& c) {
  require(c.size() == m.rows(), "solve_integer: right-hand side length mismatch");
  return solve_integer(smith_normal_form(m), c);
}

std::optional<IntVector> solve_integer(const SmithDecomposition& snf, const IntVector& c) {
  const IntMatrix& m = snf.D;
  require(c.size() == m.rows(), "solve_integer: right-hand side length mismatch");
  IntVector b = snf.U_inv * c;
  IntVector y = zero_vector(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.D.at(i, i);
      if (!mpz_divisible_p(b[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = b[i] / d;
    } else if (b[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V_inv * y;
}

Integer determinant(const IntMatrix& m) {
  require(m.square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  require(m.square(), "inverse of a non-square matrix");
  Integer d = determinant(m);
  if (d != 1 && d != -1) return std::nullopt;
  auto snf = smith_normal_form(m);
  // D is the identity here, so M^-1 = V^-1 U^-1.
  return snf.V_inv * snf.U_inv;
}

CokernelStructure cokernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  CokernelStructure cs;
  cs.ambient_dim = m.rows();
  std::vector<std::size_t> torsion_rows, free_rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.D.at(i, i);
      if (d != 1) {
        torsion_rows.push_back(i);
        cs.torsion.push_back(d);
      }
    } else {
      free_rows.push_back(i);
    }
  }
  cs.free_rank = free_rows.size();
  cs.projection = IntMatrix(torsion_rows.size() + free_rows.size(), m.rows());
  std::size_t out_row = 0;
  for (auto list : {&torsion_rows, &free_rows})
    for (std::size_t i : *list) {
      for (std::size_t j = 0; j < m.rows(); ++j) cs.projection.at(out_row, j) = snf.U_inv.at(i, j);
      ++out_row;
    }
  cs.moduli = cs.torsion;
  cs.moduli.resize(cs.torsion.size() + cs.free_rank, Integer(0));
  return cs;
}

IntVector project_to_cokernel(const CokernelStructure& cs, const IntVector& c) {
  require(c.size() == cs.ambient_dim, "project_to_cokernel: vector length mismatch");
  IntVector y = cs.projection * c;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (cs.moduli[i] != 0) y[i] = floor_mod(y[i], cs.moduli[i]);
  return y;
}

}  // namespace fixsub
