#include "moipgb/poset.hpp"

#include <algorithm>
#include <limits>

namespace moipgb {

namespace {

// Covering relation: cover[a] holds every b with b < a and nothing strictly
// between them.
struct Hasse {
  std::vector<std::vector<std::size_t>> cover;
  std::vector<bool> has_parent;
};

Hasse hasse_diagram(const PartialOrderSpec& spec, const std::vector<IntVec>& keys) {
  const std::size_t n = keys.size();
  std::vector<IntVec> img;
  img.reserve(n);
  for (const auto& k : keys) img.push_back(order_image(spec, k));
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      OrderVerdict v = compare_imaged(spec, keys[a], img[a], keys[b], img[b]);
      if (v == OrderVerdict::Less) less[a][b] = 1;
      if (v == OrderVerdict::Greater) less[b][a] = 1;
    }
  }
  Hasse h;
  h.cover.resize(n);
  h.has_parent.assign(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[b][a]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (less[b][c] && less[c][a]) covered = false;
      }
      if (covered) {
        h.cover[a].push_back(b);
        h.has_parent[b] = true;
      }
    }
  }
  return h;
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_chain_indices(const PartialOrderSpec& spec,
                                                            const std::vector<IntVec>& keys) {
  const Hasse h = hasse_diagram(spec, keys);
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> path;
  auto dfs = [&](auto&& self, std::size_t a) -> void {
    path.push_back(a);
    if (h.cover[a].empty()) {
      chains.push_back(path);
    } else {
      for (std::size_t b : h.cover[a]) self(self, b);
    }
    path.pop_back();
  };
  for (std::size_t a = 0; a < keys.size(); ++a) {
    if (!h.has_parent[a]) dfs(dfs, a);
  }
  std::sort(chains.begin(), chains.end(),
            [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
              const std::size_t n = std::min(x.size(), y.size());
              for (std::size_t i = 0; i < n; ++i) {
                if (keys[x[i]] != keys[y[i]]) return keys[x[i]] < keys[y[i]];
              }
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  return chains;
}

std::uint64_t count_maximal_chains(const PartialOrderSpec& spec,
                                   const std::vector<IntVec>& keys) {
  const Hasse h = hasse_diagram(spec, keys);
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> memo(keys.size(), 0);
  std::vector<char> done(keys.size(), 0);
  auto paths = [&](auto&& self, std::size_t a) -> std::uint64_t {
    if (done[a]) return memo[a];
    std::uint64_t total = h.cover[a].empty() ? 1 : 0;
    for (std::size_t b : h.cover[a]) {
      std::uint64_t p = self(self, b);
      total = (cap - total < p) ? cap : total + p;
    }
    done[a] = 1;
    return memo[a] = total;
  };
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    if (h.has_parent[a]) continue;
    std::uint64_t p = paths(paths, a);
    total = (cap - total < p) ? cap : total + p;
  }
  return total;
}

}  // namespace moipgb
