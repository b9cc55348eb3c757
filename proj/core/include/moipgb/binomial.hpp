#ifndef MOIPGB_BINOMIAL_HPP
#define MOIPGB_BINOMIAL_HPP

#include <compare>
#include <optional>
#include <vector>

#include "moipgb/model.hpp"

namespace moipgb {

// Weighted reverse lexicographic order.  Terms are compared by weighted
// degree first; ties are broken reverse-lexicographically with variable
// priority x_{i+1} > ... > x_n > x_1 > ... > x_i, so x_i (`cheapest`) is the
// revlex-last variable.
struct TermOrder {
  IntVec weights;
  std::size_t cheapest = 0;

  static TermOrder graded(std::size_t n, std::size_t cheapest);
  static TermOrder weighted(IntVec weights, std::size_t cheapest);
};

std::strong_ordering term_compare(const TermOrder& ord, const IntVec& a, const IntVec& b);

// x^plus - x^minus with x^plus the leading term under the order it was
// built for.  Common factors are allowed; they only cancel on saturation.
struct Binomial {
  IntVec plus;
  IntVec minus;

  IntVec move() const { return plus - minus; }
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// Orients {u, v}.  u == v gives the zero binomial (plus == minus).
Binomial make_binomial(const TermOrder& ord, const IntVec& u, const IntVec& v);

// Reduced Groebner basis of the binomial ideal generated by `gens`, sorted.
std::vector<Binomial> buchberger_total(const std::vector<Binomial>& gens, const TermOrder& ord);

// Full normal form of x^u modulo a Groebner basis.
IntVec normal_form(const std::vector<Binomial>& gb, const IntVec& u);

// Removes the largest power of x_i dividing each binomial.
std::vector<Binomial> saturate_variable(const std::vector<Binomial>& gb, std::size_t i);

// A strictly positive vector in the row space of A (so every lattice
// binomial is homogeneous for it), or nullopt when none was found.
std::optional<IntVec> row_space_weight(const IntMat& A);

using GeneratorSet = std::vector<Binomial>;

// Generators of the toric ideal of A: kernel basis, LLL, then one
// saturation round per variable.  Pairs have disjoint supports and are
// sorted.
GeneratorSet set_of_generators(const IntMat& A);

}  // namespace moipgb

#endif  // MOIPGB_BINOMIAL_HPP
