#include "moipgb/order.hpp"

#include <algorithm>

namespace moipgb {

OrderVerdict flip(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Less:
      return OrderVerdict::Greater;
    case OrderVerdict::Greater:
      return OrderVerdict::Less;
    default:
      return v;
  }
}

const char* to_string(OrderVariant v) {
  switch (v) {
    case OrderVariant::Plain:
      return "plain";
    case OrderVariant::LexRefined:
      return "lex";
    case OrderVariant::SlackRefined:
      return "slack";
  }
  return "?";
}

const char* to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Less:
      return "LESS";
    case OrderVerdict::Greater:
      return "GREATER";
    case OrderVerdict::Equal:
      return "EQUAL";
    case OrderVerdict::Incomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

PartialOrderSpec PartialOrderSpec::plain(IntMat C) {
  PartialOrderSpec s;
  s.C = std::move(C);
  return s;
}

PartialOrderSpec PartialOrderSpec::lex(IntMat C) {
  PartialOrderSpec s;
  s.C = std::move(C);
  s.variant = OrderVariant::LexRefined;
  return s;
}

PartialOrderSpec PartialOrderSpec::slack(IntMat C, std::set<std::size_t> slacks) {
  PartialOrderSpec s;
  s.C = std::move(C);
  s.variant = OrderVariant::SlackRefined;
  s.slack_indices = std::move(slacks);
  return s;
}

void check_spec(const PartialOrderSpec& spec) {
  if (!spec.priority.empty() && spec.priority.cols() != spec.C.cols()) {
    throw InvalidInput("priority matrix width differs from objective matrix");
  }
  for (std::size_t t : spec.tiebreak) {
    if (t >= spec.C.cols()) throw InvalidInput("tiebreak index out of range");
  }
  if (spec.variant != OrderVariant::SlackRefined) return;
  if (spec.slack_indices.empty()) {
    throw InvalidInput("slack-refined order needs at least one slack column");
  }
  for (std::size_t s : spec.slack_indices) {
    if (s >= spec.C.cols()) throw InvalidInput("slack index out of range");
    for (std::size_t i = 0; i < spec.C.rows(); ++i) {
      if (spec.C(i, s) != 0) {
        throw InvalidInput("slack column " + std::to_string(s) + " has objective weight");
      }
    }
  }
}

IntVec order_image(const PartialOrderSpec& spec, const IntVec& x) {
  IntVec img;
  if (!spec.priority.empty()) img = spec.priority * x;
  IntVec c = spec.C * x;
  img.insert(img.end(), c.begin(), c.end());
  return img;
}

namespace {

// Componentwise comparison of the index range [lo, hi) of two images.
OrderVerdict compare_block(const IntVec& a, const IntVec& b, std::size_t lo, std::size_t hi) {
  bool le = true, ge = true;
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] < b[i]) ge = false;
    if (a[i] > b[i]) le = false;
  }
  if (le && ge) return OrderVerdict::Equal;
  if (le) return OrderVerdict::Less;
  if (ge) return OrderVerdict::Greater;
  return OrderVerdict::Incomparable;
}

OrderVerdict lex_verdict(const IntVec& x, const IntVec& y) {
  if (x < y) return OrderVerdict::Less;
  if (y < x) return OrderVerdict::Greater;
  return OrderVerdict::Equal;
}

}  // namespace

OrderVerdict compare_imaged(const PartialOrderSpec& spec, const IntVec& x, const IntVec& ix,
                            const IntVec& y, const IntVec& iy) {
  if (x.size() != y.size() || ix.size() != iy.size()) {
    throw InvalidInput("dimension mismatch in order comparison");
  }
  if (x == y) return OrderVerdict::Equal;
  const std::size_t p = spec.priority.rows();
  OrderVerdict v = compare_block(ix, iy, 0, p);
  if (v != OrderVerdict::Equal) return v;
  for (std::size_t t : spec.tiebreak) {
    if (x[t] != y[t]) return x[t] < y[t] ? OrderVerdict::Less : OrderVerdict::Greater;
  }
  v = compare_block(ix, iy, p, ix.size());
  if (v != OrderVerdict::Equal) return v;
  switch (spec.variant) {
    case OrderVariant::Plain:
      return OrderVerdict::Incomparable;
    case OrderVariant::LexRefined:
      return lex_verdict(x, y);
    case OrderVariant::SlackRefined: {
      IntVec sx, sy;
      for (std::size_t s : spec.slack_indices) {
        sx.push_back(x[s]);
        sy.push_back(y[s]);
      }
      v = lex_verdict(sx, sy);
      return v == OrderVerdict::Equal ? OrderVerdict::Incomparable : v;
    }
  }
  return OrderVerdict::Incomparable;
}

OrderVerdict compare(const PartialOrderSpec& spec, const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw InvalidInput("dimension mismatch in order comparison");
  return compare_imaged(spec, x, order_image(spec, x), y, order_image(spec, y));
}

std::vector<IntVec> setlm(const PartialOrderSpec& spec, const IntVec& u, const IntVec& v) {
  switch (compare(spec, u, v)) {
    case OrderVerdict::Equal:
    case OrderVerdict::Greater:
      return {u};
    case OrderVerdict::Less:
      return {v};
    case OrderVerdict::Incomparable:
      break;
  }
  return {u, v};
}

std::vector<IntVec> minimal_elements(const PartialOrderSpec& spec, std::vector<IntVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Any x < y has a smaller (priority sum, tiebreak entries, objective sum,
  // tie key), so a
  // single pass in that order only has to test against survivors.
  struct Entry {
    IntVec key;
    IntVec image;
    std::size_t index;
  };
  const std::size_t p = spec.priority.rows();
  std::vector<Entry> entries;
  entries.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    IntVec img = order_image(spec, points[i]);
    Integer ps = 0, cs = 0;
    for (std::size_t r = 0; r < img.size(); ++r) (r < p ? ps : cs) += img[r];
    IntVec key{ps};
    for (std::size_t t : spec.tiebreak) key.push_back(points[i][t]);
    key.push_back(cs);
    if (spec.variant == OrderVariant::LexRefined) {
      key.insert(key.end(), points[i].begin(), points[i].end());
    } else if (spec.variant == OrderVariant::SlackRefined) {
      for (std::size_t s : spec.slack_indices) key.push_back(points[i][s]);
    }
    entries.push_back({std::move(key), std::move(img), i});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::vector<const Entry*> kept;
  for (const auto& e : entries) {
    bool dominated = false;
    for (const Entry* k : kept) {
      if (compare_imaged(spec, points[k->index], k->image, points[e.index], e.image) ==
          OrderVerdict::Less) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(&e);
  }
  std::vector<IntVec> out;
  out.reserve(kept.size());
  for (const Entry* k : kept) out.push_back(points[k->index]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triplet> triplet_set(const PartialOrderSpec& spec, const std::vector<IntVec>& U,
                                 const std::vector<IntVec>& V) {
  if (U.size() != V.size()) throw InvalidInput("triplet_set: sequences differ in length");
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < U.size(); ++i) {
    for (auto& w : setlm(spec, U[i], V[i])) out.push_back({U[i], V[i], std::move(w)});
  }
  return out;
}

}  // namespace moipgb
