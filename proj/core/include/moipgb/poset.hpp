#ifndef MOIPGB_POSET_HPP
#define MOIPGB_POSET_HPP

#include <cstdint>
#include <vector>

#include "moipgb/order.hpp"

namespace moipgb {

// Maximal chains of the finite poset given by `keys` under `spec`.  Each
// chain lists item indices from the largest key down to the smallest.  Items
// with equal keys are treated as incomparable.  Chains come out sorted by
// their key sequences, then by index sequence.
std::vector<std::vector<std::size_t>> maximal_chain_indices(const PartialOrderSpec& spec,
                                                            const std::vector<IntVec>& keys);

// Number of maximal chains, without enumerating them.  Saturates at
// UINT64_MAX.
std::uint64_t count_maximal_chains(const PartialOrderSpec& spec,
                                   const std::vector<IntVec>& keys);

template <class T, class KeyFn>
std::vector<std::vector<T>> maximal_chains(const PartialOrderSpec& spec,
                                           const std::vector<T>& items, KeyFn key) {
  std::vector<IntVec> keys;
  keys.reserve(items.size());
  for (const auto& it : items) keys.push_back(key(it));
  std::vector<std::vector<T>> out;
  for (const auto& chain : maximal_chain_indices(spec, keys)) {
    std::vector<T> c;
    c.reserve(chain.size());
    for (std::size_t i : chain) c.push_back(items[i]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace moipgb

#endif  // MOIPGB_POSET_HPP
