#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tiergraph/types.hpp"

namespace tiergraph {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Derive an independent stream key from a seed and structural coordinates
// (epoch, batch, layer, node, ...). Draws made from a stream depend only on
// the coordinates, never on scheduling, so parallel replay is reproducible.
inline std::uint64_t derive_stream_key(std::uint64_t seed,
                                       std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = mix64(seed ^ 0x6A09E667F3BCC908ull);
  for (std::uint64_t c : coords) h = mix64(h ^ mix64(c));
  return h;
}

// Counter-based stream: successive outputs are splitmix64 of an incrementing
// counter. Cheap to construct, no warm-up, any number of streams.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() { return mix64(state_++); }

  // Uniform in [0, bound). Lemire multiply-shift with rejection, exact.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (-bound) % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Uniform k-subset of [0, population) via Floyd's algorithm: O(k) draws
// regardless of population size. Output order is insertion order.
void sample_index_subset(RngStream& rng, std::uint64_t population, std::uint64_t k,
                         std::vector<std::uint64_t>& out);

// Seeded Fisher-Yates shuffle.
template <typename T>
void shuffle_in_place(RngStream& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace tiergraph
