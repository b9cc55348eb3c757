#include "moipgb/model.hpp"

#include <algorithm>
#include <sstream>

namespace moipgb {

namespace {

void check_same_size(const IntVec& a, const IntVec& b, const char* what) {
  if (a.size() != b.size()) {
    throw InvalidInput(std::string("dimension mismatch in ") + what + ": " +
                       std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
}

}  // namespace

IntVec make_vec(std::initializer_list<long long> values) {
  IntVec v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

IntVec zeros(std::size_t n) { return IntVec(n, Integer(0)); }

IntVec unit(std::size_t n, std::size_t i) {
  IntVec v = zeros(n);
  v[i] = 1;
  return v;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  r += b;
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  r -= b;
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec operator*(const Integer& s, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

IntVec& operator+=(IntVec& a, const IntVec& b) {
  check_same_size(a, b, "vector addition");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVec& operator-=(IntVec& a, const IntVec& b) {
  check_same_size(a, b, "vector subtraction");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Integer dot(const IntVec& a, const IntVec& b) {
  check_same_size(a, b, "dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

bool is_nonnegative(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x >= 0; });
}

bool dominates_componentwise(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

IntVec componentwise_max(const IntVec& a, const IntVec& b) {
  check_same_size(a, b, "componentwise max");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? b[i] : a[i];
  return r;
}

IntVec componentwise_min(const IntVec& a, const IntVec& b) {
  check_same_size(a, b, "componentwise min");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

IntVec positive_part(const IntVec& u) {
  IntVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] > 0 ? u[i] : Integer(0);
  return r;
}

IntVec negative_part(const IntVec& u) {
  IntVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] < 0 ? Integer(-u[i]) : Integer(0);
  return r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows, zeros(cols)), cols_(cols) {}

IntMat::IntMat(std::vector<IntVec> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const IntVec& r : rows_) {
    if (r.size() != cols_) throw InvalidInput("matrix rows have different lengths");
  }
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
  for (auto r : rows) rows_.push_back(make_vec(r));
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const IntVec& r : rows_) {
    if (r.size() != cols_) throw InvalidInput("matrix rows have different lengths");
  }
}

IntVec IntMat::column(std::size_t j) const {
  IntVec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
  return c;
}

IntVec IntMat::operator*(const IntVec& x) const {
  if (x.size() != cols_) {
    throw InvalidInput("dimension mismatch: matrix has " + std::to_string(cols_) +
                       " columns, vector has " + std::to_string(x.size()) +
                       " entries");
  }
  IntVec r(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) r[i] = dot(rows_[i], x);
  return r;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  }
  return t;
}

ValidationReport validate_instance(const MoipInstance& inst) {
  ValidationReport report;
  auto& p = report.problems;
  const std::size_t m = inst.A.rows();
  const std::size_t n = inst.A.cols();
  if (n == 0) p.push_back("constraint matrix A has no columns");
  if (inst.b.size() != m) {
    p.push_back("rhs b has length " + std::to_string(inst.b.size()) +
                " but A has " + std::to_string(m) + " rows");
  }
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    if (inst.b[i] < 0) p.push_back("negative rhs b[" + std::to_string(i) + "]");
  }
  if (inst.C.rows() == 0) p.push_back("objective matrix C has no rows");
  if (inst.C.rows() > 0 && inst.C.cols() != n) {
    p.push_back("objective matrix C has " + std::to_string(inst.C.cols()) +
                " columns but A has " + std::to_string(n));
  }
  for (std::size_t i = 0; i < inst.C.rows(); ++i) {
    for (std::size_t j = 0; j < inst.C.cols(); ++j) {
      if (inst.C(i, j) < 0) {
        p.push_back("negative objective entry C[" + std::to_string(i) + "][" +
                    std::to_string(j) + "]");
      }
    }
  }
  if (inst.bounds) {
    if (inst.bounds->size() != n) {
      p.push_back("bounds has length " + std::to_string(inst.bounds->size()) +
                  " but there are " + std::to_string(n) + " variables");
    }
    for (std::size_t j = 0; j < inst.bounds->size(); ++j) {
      if ((*inst.bounds)[j] < 0) {
        p.push_back("negative upper bound for variable " + std::to_string(j));
      }
    }
  }
  for (std::size_t s : inst.slack_indices) {
    if (s >= n) p.push_back("slack index " + std::to_string(s) + " out of range");
  }
  return report;
}

void require_valid(const MoipInstance& inst) {
  ValidationReport r = validate_instance(inst);
  if (r.ok()) return;
  std::string msg = "invalid instance:";
  for (const auto& e : r.problems) msg += "\n  - " + e;
  throw InvalidInput(msg);
}

ObjImage objective_image(const IntMat& C, const IntVec& x) { return {C * x}; }

bool is_feasible(const MoipInstance& inst, const IntVec& x) {
  if (x.size() != inst.num_vars() || !is_nonnegative(x)) return false;
  if (inst.bounds && !dominates_componentwise(*inst.bounds, x)) return false;
  return inst.A * x == inst.b;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<std::optional<Integer>> propagate_bounds(const IntMat& A, const IntVec& b,
                                                     std::vector<std::optional<Integer>> ub) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  ub.resize(n);
  bool changed = true;
  for (std::size_t pass = 0; changed && pass < 1000; ++pass) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Integer& a = A(i, j);
        if (a == 0) continue;
        // |a| x_j <= +-(b_i - sum_{k != j} a_ik x_k), maximized over the
        // opposite-signed terms.
        Integer s = a > 0 ? b[i] : Integer(-b[i]);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
          const Integer& c = A(i, k);
          if (k == j || c == 0 || (c > 0) == (a > 0)) continue;
          if (!ub[k]) {
            ok = false;
          } else {
            s += (c < 0 ? Integer(-c) : c) * *ub[k];
          }
        }
        if (!ok) continue;
        Integer cand = floor_div(s, a > 0 ? a : Integer(-a));
        if (cand < 0) cand = 0;
        if (!ub[j] || cand < *ub[j]) {
          ub[j] = cand;
          changed = true;
        }
      }
    }
  }
  return ub;
}

MoipInstance with_bounds_as_constraints(const MoipInstance& inst) {
  if (!inst.bounds) return inst;
  const std::size_t m = inst.num_constraints();
  const std::size_t n = inst.num_vars();
  const IntVec& u = *inst.bounds;
  std::vector<bool> needed(n, true);
  for (std::size_t j = n; j-- > 0;) {
    std::vector<std::optional<Integer>> known(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (needed[k] && k != j) known[k] = u[k];
    }
    auto implied = propagate_bounds(inst.A, inst.b, std::move(known));
    if (implied[j] && *implied[j] <= u[j]) needed[j] = false;
  }
  std::vector<std::size_t> bounded;
  for (std::size_t j = 0; j < n; ++j) {
    if (needed[j]) bounded.push_back(j);
  }
  const std::size_t width = n + bounded.size();
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < m; ++i) {
    IntVec r = inst.A.row(i);
    r.resize(width, Integer(0));
    rows.push_back(std::move(r));
  }
  IntVec b = inst.b;
  for (std::size_t t = 0; t < bounded.size(); ++t) {
    IntVec r = zeros(width);
    r[bounded[t]] = 1;
    r[n + t] = 1;
    rows.push_back(std::move(r));
    b.push_back(u[bounded[t]]);
  }
  std::vector<IntVec> crows;
  for (std::size_t i = 0; i < inst.C.rows(); ++i) {
    IntVec r = inst.C.row(i);
    r.resize(width, Integer(0));
    crows.push_back(std::move(r));
  }
  MoipInstance out;
  out.A = IntMat(std::move(rows));
  out.b = std::move(b);
  out.C = IntMat(std::move(crows));
  out.slack_indices = inst.slack_indices;
  for (std::size_t t = 0; t < bounded.size(); ++t) out.slack_indices.insert(n + t);
  return out;
}

}  // namespace moipgb
