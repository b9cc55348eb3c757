#ifndef MOIPGB_ORDER_HPP
#define MOIPGB_ORDER_HPP

#include <set>
#include <vector>

#include "moipgb/model.hpp"

namespace moipgb {

enum class OrderVariant { Plain, LexRefined, SlackRefined };
enum class OrderVerdict { Less, Greater, Equal, Incomparable };

OrderVerdict flip(OrderVerdict v);
const char* to_string(OrderVariant v);
const char* to_string(OrderVerdict v);

// x < y when C x <= C y componentwise and C x != C y.  The refined variants
// break ties between distinct points with equal images lexicographically,
// on the whole vector (LexRefined) or on the slack entries (SlackRefined).
//
// A nonempty `priority` matrix is compared before C: when the priority images
// differ they alone decide.  This is how the extended Conti-Traverso program
// ranks its artificial variables above every real objective.  Points with
// equal priority images are next compared lexicographically on the `tiebreak`
// coordinates, in the listed order, before C is consulted.
struct PartialOrderSpec {
  IntMat C;
  OrderVariant variant = OrderVariant::Plain;
  std::set<std::size_t> slack_indices;
  IntMat priority;
  std::vector<std::size_t> tiebreak;

  static PartialOrderSpec plain(IntMat C);
  static PartialOrderSpec lex(IntMat C);
  static PartialOrderSpec slack(IntMat C, std::set<std::size_t> slacks);

  std::size_t dim() const { return C.cols(); }
};

// Throws InvalidInput when a slack-refined spec has no slack columns or a
// slack column carries objective weight.
void check_spec(const PartialOrderSpec& spec);

// Concatenated priority and objective images.  compare() on two points is
// equivalent to compare_imaged() on their images, which lets callers cache.
IntVec order_image(const PartialOrderSpec& spec, const IntVec& x);

OrderVerdict compare_imaged(const PartialOrderSpec& spec, const IntVec& x,
                            const IntVec& ix, const IntVec& y, const IntVec& iy);
OrderVerdict compare(const PartialOrderSpec& spec, const IntVec& x, const IntVec& y);

inline bool precedes(const PartialOrderSpec& spec, const IntVec& x, const IntVec& y) {
  return compare(spec, x, y) == OrderVerdict::Less;
}

// The leading points among {u, v}: the larger one, or both when incomparable.
std::vector<IntVec> setlm(const PartialOrderSpec& spec, const IntVec& u, const IntVec& v);

// The <-minimal members of `points` (duplicates collapsed), in ascending
// lexicographic order.
std::vector<IntVec> minimal_elements(const PartialOrderSpec& spec, std::vector<IntVec> points);

struct Triplet {
  IntVec u, v, w;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

std::vector<Triplet> triplet_set(const PartialOrderSpec& spec, const std::vector<IntVec>& U,
                                 const std::vector<IntVec>& V);

}  // namespace moipgb

#endif  // MOIPGB_ORDER_HPP
