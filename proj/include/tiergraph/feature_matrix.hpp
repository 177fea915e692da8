#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "tiergraph/types.hpp"

namespace tiergraph {

// Row-major feature storage. Element type is opaque: rows move as byte blocks,
// so any fixed-width element works (f32, f64, ...).
struct FeatureMatrix {
  std::uint64_t num_rows = 0;
  std::uint64_t dim = 0;
  std::uint32_t elem_bytes = 0;
  std::vector<std::uint8_t> data;  // num_rows * dim * elem_bytes bytes

  std::uint64_t row_bytes() const { return dim * elem_bytes; }

  std::span<const std::uint8_t> row(std::uint64_t r) const {
    return {data.data() + r * row_bytes(), row_bytes()};
  }
  std::span<std::uint8_t> row(std::uint64_t r) {
    return {data.data() + r * row_bytes(), row_bytes()};
  }
};

// Throws FormatError if data size disagrees with num_rows * dim * elem_bytes.
void validate_features(const FeatureMatrix& f);

// num_rows x dim float32 matrix with a deterministic per-row fill pattern.
FeatureMatrix make_test_features(std::uint64_t num_rows, std::uint64_t dim);

}  // namespace tiergraph
