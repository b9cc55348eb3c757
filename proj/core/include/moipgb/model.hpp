#ifndef MOIPGB_MODEL_HPP
#define MOIPGB_MODEL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace moipgb {

using Integer = boost::multiprecision::cpp_int;

/// Dense vector of arbitrary-precision integers.
using IntVec = std::vector<Integer>;

// Errors.  The CLI maps each class onto its exit code.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundedRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IntVec make_vec(std::initializer_list<long long> values);
IntVec zeros(std::size_t n);
IntVec unit(std::size_t n, std::size_t i);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Integer& s, const IntVec& a);
IntVec& operator+=(IntVec& a, const IntVec& b);
IntVec& operator-=(IntVec& a, const IntVec& b);

Integer dot(const IntVec& a, const IntVec& b);

bool is_zero(const IntVec& a);
bool is_nonnegative(const IntVec& a);
/// Componentwise a >= b.
bool dominates_componentwise(const IntVec& a, const IntVec& b);
IntVec componentwise_max(const IntVec& a, const IntVec& b);
IntVec componentwise_min(const IntVec& a, const IntVec& b);
/// Positive part (u+) and negative part (u-) so that u = u+ - u-.
IntVec positive_part(const IntVec& u);
IntVec negative_part(const IntVec& u);

std::string to_string(const IntVec& v);
std::ostream& operator<<(std::ostream& os, const IntVec& v);

/// Rectangular integer matrix, stored by rows.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  explicit IntMat(std::vector<IntVec> rows);
  IntMat(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  const IntVec& row(std::size_t i) const { return rows_[i]; }
  IntVec& row(std::size_t i) { return rows_[i]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return rows_[i][j];
  }
  Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  IntVec column(std::size_t j) const;
  IntVec operator*(const IntVec& x) const;
  IntMat transposed() const;

  const std::vector<IntVec>& row_vectors() const { return rows_; }

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  std::vector<IntVec> rows_;
  std::size_t cols_ = 0;
};

/// Vector of objective values C*x.
struct ObjImage {
  IntVec values;
  friend auto operator<=>(const ObjImage&, const ObjImage&) = default;
};

/// The problem min C x  s.t.  A x = b, x in Z^n_+ (optionally x <= bounds).
struct MoipInstance {
  IntMat A;
  IntVec b;
  IntMat C;
  std::optional<IntVec> bounds;
  std::set<std::size_t> slack_indices;

  std::size_t num_vars() const { return A.cols(); }
  std::size_t num_constraints() const { return A.rows(); }
  std::size_t num_objectives() const { return C.rows(); }
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate_instance(const MoipInstance& inst);
/// Throws InvalidInput listing every violated invariant.
void require_valid(const MoipInstance& inst);

ObjImage objective_image(const IntMat& C, const IntVec& x);

/// A x == b and x >= 0 (and x <= bounds when present).
bool is_feasible(const MoipInstance& inst, const IntVec& x);

/// Upper bounds implied by A x = b, x >= 0 and the already `known` bounds,
/// by interval propagation over the rows until nothing tightens.  Entries that
/// stay unbounded are empty.
std::vector<std::optional<Integer>> propagate_bounds(const IntMat& A, const IntVec& b,
                                                     std::vector<std::optional<Integer>> known);

/// Rewrites explicit upper bounds as equality rows x_j + s_j = u_j with new
/// slack columns, skipping bounds the other rows already imply.  Solutions of
/// the result project onto the first n entries.
MoipInstance with_bounds_as_constraints(const MoipInstance& inst);

}  // namespace moipgb

#endif  // MOIPGB_MODEL_HPP
