#include "tiergraph/rng.hpp"

#include <algorithm>
#include <unordered_set>

namespace tiergraph {

void sample_index_subset(RngStream& rng, std::uint64_t population, std::uint64_t k,
                         std::vector<std::uint64_t>& out) {
  out.clear();
  if (k >= population) {
    out.resize(population);
    for (std::uint64_t i = 0; i < population; ++i) out[i] = i;
    return;
  }
  out.reserve(k);
  if (k <= 64) {
    // linear membership scan beats a hash set at the fanout sizes we see
    for (std::uint64_t j = population - k; j < population; ++j) {
      const std::uint64_t t = rng.next_below(j + 1);
      if (std::find(out.begin(), out.end(), t) != out.end()) {
        out.push_back(j);
      } else {
        out.push_back(t);
      }
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(k * 2);
    for (std::uint64_t j = population - k; j < population; ++j) {
      const std::uint64_t t = rng.next_below(j + 1);
      if (seen.insert(t).second) {
        out.push_back(t);
      } else {
        seen.insert(j);
        out.push_back(j);
      }
    }
  }
}

}  // namespace tiergraph
