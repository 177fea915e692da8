#include "tiergraph/feature_matrix.hpp"

#include <string>

#include "tiergraph/rng.hpp"

namespace tiergraph {

void validate_features(const FeatureMatrix& f) {
  const std::uint64_t want = f.num_rows * f.dim * f.elem_bytes;
  if (f.data.size() != want)
    throw FormatError("features: data holds " + std::to_string(f.data.size()) +
                      " bytes, expected " + std::to_string(want));
}

FeatureMatrix make_test_features(std::uint64_t num_rows, std::uint64_t dim) {
  FeatureMatrix f;
  f.num_rows = num_rows;
  f.dim = dim;
  f.elem_bytes = sizeof(float);
  f.data.resize(num_rows * dim * sizeof(float));
  auto* vals = reinterpret_cast<float*>(f.data.data());
  for (std::uint64_t r = 0; r < num_rows; ++r) {
    const auto base = static_cast<float>(mix64(r) >> 40);
    for (std::uint64_t c = 0; c < dim; ++c) vals[r * dim + c] = base + static_cast<float>(c);
  }
  return f;
}

}  // namespace tiergraph
