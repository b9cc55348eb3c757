#include "moipgb/lattice.hpp"

#include <algorithm>
#include <utility>

namespace moipgb {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer round_rational(const Rational& x) {
  Rational y = x + Rational(1, 2);
  return floor_div(boost::multiprecision::numerator(y), boost::multiprecision::denominator(y));
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void column_axpy(IntMat& M, std::size_t dst, const Integer& q, std::size_t src) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) -= q * M(i, src);
}

void column_swap(IntMat& M, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}

void column_negate(IntMat& M, std::size_t a) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, a) = -M(i, a);
}

Rational rdot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

ColumnEchelon column_echelon(const IntMat& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMat M = A;
  IntMat U(n, n);
  for (std::size_t j = 0; j < n; ++j) U(j, j) = 1;
  ColumnEchelon out;
  std::size_t r = 0;
  for (std::size_t i = 0; i < m && r < n; ++i) {
    for (;;) {
      std::size_t p = n;
      for (std::size_t j = r; j < n; ++j) {
        if (M(i, j) != 0 && (p == n || abs_int(M(i, j)) < abs_int(M(i, p)))) p = j;
      }
      if (p == n) break;
      bool single = true;
      for (std::size_t j = r; j < n; ++j) {
        if (j == p || M(i, j) == 0) continue;
        Integer q = M(i, j) / M(i, p);
        column_axpy(M, j, q, p);
        column_axpy(U, j, q, p);
        if (M(i, j) != 0) single = false;
      }
      if (!single) continue;
      column_swap(M, r, p);
      column_swap(U, r, p);
      if (M(i, r) < 0) {
        column_negate(M, r);
        column_negate(U, r);
      }
      out.pivot_rows.push_back(i);
      ++r;
      break;
    }
  }
  out.rank = r;
  std::vector<IntVec> hrows;
  for (std::size_t i = 0; i < m; ++i) {
    hrows.emplace_back(M.row(i).begin(), M.row(i).begin() + static_cast<std::ptrdiff_t>(r));
  }
  out.H = r == 0 ? IntMat(m, 0) : IntMat(std::move(hrows));
  out.U = std::move(U);
  return out;
}

std::size_t rank(const IntMat& A) { return column_echelon(A).rank; }

std::vector<IntVec> kernel_basis(const IntMat& A) {
  ColumnEchelon e = column_echelon(A);
  std::vector<IntVec> basis;
  for (std::size_t j = e.rank; j < A.cols(); ++j) basis.push_back(e.U.column(j));
  return basis;
}

std::optional<IntVec> integer_solution(const IntMat& A, const IntVec& b) {
  if (b.size() != A.rows()) throw InvalidInput("integer_solution: dimension mismatch");
  ColumnEchelon e = column_echelon(A);
  IntVec y(e.rank);
  for (std::size_t k = 0; k < e.rank; ++k) {
    const std::size_t p = e.pivot_rows[k];
    Integer rest = b[p];
    for (std::size_t j = 0; j < k; ++j) rest -= e.H(p, j) * y[j];
    if (rest % e.H(p, k) != 0) return std::nullopt;
    y[k] = rest / e.H(p, k);
  }
  IntVec x = zeros(A.cols());
  for (std::size_t k = 0; k < e.rank; ++k) x += y[k] * e.U.column(k);
  if (A * x != b) return std::nullopt;
  return x;
}

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      std::size_t p = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (p == rows.size() || abs_int(rows[i][c]) < abs_int(rows[p][c]))) {
          p = i;
        }
      }
      if (p == rows.size()) break;
      bool single = true;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (i == p || rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[p][c];
        rows[i] -= q * rows[p];
        if (rows[i][c] != 0) single = false;
      }
      if (!single) continue;
      std::swap(rows[r], rows[p]);
      if (rows[r][c] < 0) rows[r] = -rows[r];
      for (std::size_t i = 0; i < r; ++i) {
        Integer q = floor_div(rows[i][c], rows[r][c]);
        if (q != 0) rows[i] -= q * rows[r];
      }
      ++r;
      break;
    }
  }
  rows.resize(r);
  return rows;
}

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v) {
  std::vector<IntVec> ext = basis;
  ext.push_back(v);
  return same_lattice(basis, ext);
}

GramSchmidt gram_schmidt(const std::vector<IntVec>& basis) {
  const std::size_t k = basis.size();
  GramSchmidt gs;
  gs.mu.assign(k, std::vector<Rational>(k, Rational(0)));
  gs.norms.assign(k, Rational(0));
  std::vector<std::vector<Rational>> star(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> bi(basis[i].begin(), basis[i].end());
    star[i] = bi;
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = rdot(bi, star[j]) / gs.norms[j];
      for (std::size_t t = 0; t < bi.size(); ++t) star[i][t] -= gs.mu[i][j] * star[j][t];
    }
    gs.norms[i] = rdot(star[i], star[i]);
    if (gs.norms[i] == 0) throw InvalidInput("lattice basis is linearly dependent");
  }
  return gs;
}

std::vector<IntVec> lll_reduce(std::vector<IntVec> b, const Rational& delta) {
  if (b.size() < 2) return b;
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < b.size()) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = round_rational(gs.mu[k][jj]);
      if (q != 0) {
        b[k] -= q * b[jj];
        for (std::size_t t = 0; t < jj; ++t) gs.mu[k][t] -= Rational(q) * gs.mu[jj][t];
        gs.mu[k][jj] -= Rational(q);
      }
    }
    const Rational& m = gs.mu[k][k - 1];
    if (gs.norms[k] >= (delta - m * m) * gs.norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

bool is_size_reduced(const std::vector<IntVec>& basis) {
  GramSchmidt gs = gram_schmidt(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational a = gs.mu[i][j] < 0 ? Rational(-gs.mu[i][j]) : gs.mu[i][j];
      if (a > Rational(1, 2)) return false;
    }
  }
  return true;
}

bool satisfies_lovasz(const std::vector<IntVec>& basis, const Rational& delta) {
  GramSchmidt gs = gram_schmidt(basis);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    const Rational& m = gs.mu[k][k - 1];
    if (gs.norms[k] < (delta - m * m) * gs.norms[k - 1]) return false;
  }
  return true;
}

}  // namespace moipgb
