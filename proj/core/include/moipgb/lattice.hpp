#ifndef MOIPGB_LATTICE_HPP
#define MOIPGB_LATTICE_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moipgb/model.hpp"

namespace moipgb {

using Rational = boost::multiprecision::cpp_rational;

/// Column-style echelon form A U = [H | 0] with U unimodular.
struct ColumnEchelon {
  IntMat H;  // m x rank
  IntMat U;  // n x n
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // row of the leading entry of column k of H
};

ColumnEchelon column_echelon(const IntMat& A);

std::size_t rank(const IntMat& A);

/// Basis of the integer lattice ker(A) cap Z^n, n - rank(A) vectors.
std::vector<IntVec> kernel_basis(const IntMat& A);

/// Some x in Z^n with A x = b, if one exists.
std::optional<IntVec> integer_solution(const IntMat& A, const IntVec& b);

/// Canonical row Hermite normal form of the lattice spanned by `rows`
/// (zero rows dropped).  Two generating sets span the same lattice iff their
/// forms are equal.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows);
bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

/// Is v an integer combination of `basis`?
bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v);

/// Exact LLL reduction with parameter delta (default 3/4).
std::vector<IntVec> lll_reduce(std::vector<IntVec> basis, const Rational& delta = Rational(3, 4));

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> norms;  // squared lengths of the orthogonalized vectors
};

GramSchmidt gram_schmidt(const std::vector<IntVec>& basis);

bool is_size_reduced(const std::vector<IntVec>& basis);
bool satisfies_lovasz(const std::vector<IntVec>& basis, const Rational& delta = Rational(3, 4));

}  // namespace moipgb

#endif  // MOIPGB_LATTICE_HPP
