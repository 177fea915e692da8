#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tiergraph/sampling.hpp"
#include "tiergraph/types.hpp"

namespace tiergraph {

// Three-tier placement over score-ordered feature rows:
//   [0, local_boundary)              replicated on every device ("local hot")
//   [local_boundary, multi_boundary) interleaved round-robin across devices
//   [multi_boundary, num_rows)       cold rows on the host
struct TierLayout {
  std::uint64_t num_rows = 0;
  std::uint64_t local_boundary = 0;
  std::uint64_t multi_boundary = 0;
  std::uint32_t num_devices = 1;
  std::uint64_t feature_dim = 0;
  std::uint32_t elem_bytes = 0;

  std::uint64_t bytes_per_row() const { return feature_dim * elem_bytes; }
};

void validate_layout(const TierLayout& layout);

enum class Tier : std::uint8_t { LocalHot, InterleavedDevice, ColdHost };

struct Location {
  Tier tier = Tier::ColdHost;
  std::uint32_t device = 0;  // meaningful for InterleavedDevice only
  std::uint64_t row_within_tier = 0;

  bool operator==(const Location&) const = default;
};

// Unidirectional bandwidths in GB/s for the three access classes.
struct LinkCostModel {
  double local_gbps = 900.0;  // device-local memory
  double peer_gbps = 150.0;   // aggregate device-to-device links
  double host_gbps = 16.0;    // host link
};

void validate_cost_model(const LinkCostModel& cost);

// Byte-accurate access accounting. "local" covers LocalHot rows plus
// interleaved rows owned by the requesting device; "peer" the remaining
// interleaved rows; "host" the cold rows.
struct TrafficReport {
  std::uint64_t local_accesses = 0;
  std::uint64_t peer_accesses = 0;
  std::uint64_t host_accesses = 0;
  std::uint64_t local_bytes = 0;
  std::uint64_t peer_bytes = 0;
  std::uint64_t host_bytes = 0;

  std::uint64_t total_accesses() const {
    return local_accesses + peer_accesses + host_accesses;
  }
  // fraction of accesses served from a device tier
  double hit_ratio() const;
  double est_transfer_seconds(const LinkCostModel& cost) const;

  TrafficReport& operator+=(const TrafficReport& other);
  bool operator==(const TrafficReport&) const = default;
};

// Maps a flat row id onto its tier: below local_boundary the row is
// replicated; below multi_boundary it lives on device (offset mod D) at row
// (offset div D); otherwise it is cold. Independent of requesting_device,
// which is only range-checked here and priced during replay.
Location resolve(const TierLayout& layout, std::uint64_t row_id,
                 std::uint32_t requesting_device);

// Boundaries from fractions: local_boundary = round(replicated_fraction * N),
// multi_boundary = round(hot_fraction * N). When per_device_budget_bytes is
// nonzero, fails if a device's share (replicated rows + its interleaved slice)
// exceeds it.
TierLayout plan_layout(std::uint64_t num_rows, double hot_fraction,
                       double replicated_fraction, std::uint32_t num_devices,
                       std::uint64_t feature_dim, std::uint32_t elem_bytes,
                       std::uint64_t per_device_budget_bytes = 0);

// Account one access per id as seen from requesting_device. No deduplication;
// callers control that.
void gather(const TierLayout& layout, std::span<const std::uint64_t> row_ids,
            std::uint32_t requesting_device, TrafficReport& report);

// Replay a whole counter against the layout. Row ids are counter indices, so
// feed row-ordered counts (see counts_in_row_order). Accesses to interleaved
// rows are attributed round-robin over requesting devices, restarting at
// device 0 for each row.
TrafficReport simulate_trace(const AccessCounter& counter, const TierLayout& layout);

// row_counts[rank] = counter.counts[ordering[rank]].
std::vector<std::uint64_t> counts_in_row_order(const AccessCounter& counter,
                                               std::span<const NodeId> ordering);

struct SweepRow {
  double hot_fraction = 0.0;
  double replicated_fraction = 0.0;
  TierLayout layout;
  TrafficReport report;
};

// One report per hot fraction, the hot set being a prefix of `ordering`.
// replicated_fraction is clamped to each hot fraction.
std::vector<SweepRow> hot_fraction_sweep(const AccessCounter& counter,
                                         std::span<const NodeId> ordering,
                                         std::span<const double> fractions,
                                         double replicated_fraction,
                                         std::uint32_t num_devices,
                                         std::uint64_t feature_dim,
                                         std::uint32_t elem_bytes,
                                         std::uint64_t per_device_budget_bytes = 0);

// Report CSV with the layout descriptor as leading "# key=value" lines.
void write_report_csv(std::span<const SweepRow> rows, const LinkCostModel& cost,
                      const std::string& path);

}  // namespace tiergraph
