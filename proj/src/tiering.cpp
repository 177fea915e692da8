#include "tiergraph/tiering.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <string>

namespace tiergraph {

void validate_layout(const TierLayout& layout) {
  if (layout.num_devices < 1) throw DomainError("layout: num_devices must be >= 1");
  if (layout.local_boundary > layout.multi_boundary ||
      layout.multi_boundary > layout.num_rows)
    throw DomainError("layout: need 0 <= local_boundary <= multi_boundary <= num_rows, got " +
                      std::to_string(layout.local_boundary) + ", " +
                      std::to_string(layout.multi_boundary) + ", " +
                      std::to_string(layout.num_rows));
}

void validate_cost_model(const LinkCostModel& cost) {
  if (!(cost.local_gbps > 0.0 && cost.peer_gbps > 0.0 && cost.host_gbps > 0.0))
    throw DomainError("cost model: all bandwidths must be positive");
}

double TrafficReport::hit_ratio() const {
  const std::uint64_t total = total_accesses();
  if (total == 0) return 0.0;
  return 1.0 - static_cast<double>(host_accesses) / static_cast<double>(total);
}

double TrafficReport::est_transfer_seconds(const LinkCostModel& cost) const {
  constexpr double kGiB = 1e9;  // GB/s bandwidths are decimal
  return static_cast<double>(local_bytes) / (cost.local_gbps * kGiB) +
         static_cast<double>(peer_bytes) / (cost.peer_gbps * kGiB) +
         static_cast<double>(host_bytes) / (cost.host_gbps * kGiB);
}

TrafficReport& TrafficReport::operator+=(const TrafficReport& other) {
  local_accesses += other.local_accesses;
  peer_accesses += other.peer_accesses;
  host_accesses += other.host_accesses;
  local_bytes += other.local_bytes;
  peer_bytes += other.peer_bytes;
  host_bytes += other.host_bytes;
  return *this;
}

Location resolve(const TierLayout& layout, std::uint64_t row_id,
                 std::uint32_t requesting_device) {
  if (row_id >= layout.num_rows)
    throw DomainError("row " + std::to_string(row_id) + " out of range for " +
                      std::to_string(layout.num_rows) + " rows");
  if (requesting_device >= layout.num_devices)
    throw DomainError("requesting device " + std::to_string(requesting_device) +
                      " out of range for " + std::to_string(layout.num_devices) + " devices");
  if (row_id < layout.local_boundary)
    return {Tier::LocalHot, 0, row_id};
  if (row_id < layout.multi_boundary) {
    const std::uint64_t offset = row_id - layout.local_boundary;
    return {Tier::InterleavedDevice,
            static_cast<std::uint32_t>(offset % layout.num_devices),
            offset / layout.num_devices};
  }
  return {Tier::ColdHost, 0, row_id - layout.multi_boundary};
}

TierLayout plan_layout(std::uint64_t num_rows, double hot_fraction,
                       double replicated_fraction, std::uint32_t num_devices,
                       std::uint64_t feature_dim, std::uint32_t elem_bytes,
                       std::uint64_t per_device_budget_bytes) {
  if (!(replicated_fraction >= 0.0 && replicated_fraction <= hot_fraction &&
        hot_fraction <= 1.0))
    throw DomainError("plan_layout: need 0 <= replicated_fraction <= hot_fraction <= 1");
  if (num_devices < 1) throw DomainError("plan_layout: num_devices must be >= 1");

  TierLayout layout;
  layout.num_rows = num_rows;
  layout.local_boundary = static_cast<std::uint64_t>(
      std::llround(replicated_fraction * static_cast<double>(num_rows)));
  layout.multi_boundary = static_cast<std::uint64_t>(
      std::llround(hot_fraction * static_cast<double>(num_rows)));
  layout.num_devices = num_devices;
  layout.feature_dim = feature_dim;
  layout.elem_bytes = elem_bytes;
  validate_layout(layout);

  if (per_device_budget_bytes > 0) {
    const std::uint64_t interleaved = layout.multi_boundary - layout.local_boundary;
    const std::uint64_t per_device_rows =
        layout.local_boundary + (interleaved + num_devices - 1) / num_devices;
    const std::uint64_t required = per_device_rows * layout.bytes_per_row();
    if (required > per_device_budget_bytes)
      throw DomainError("layout needs " + std::to_string(required) +
                        " bytes per device but the budget is " +
                        std::to_string(per_device_budget_bytes));
  }
  return layout;
}

void gather(const TierLayout& layout, std::span<const std::uint64_t> row_ids,
            std::uint32_t requesting_device, TrafficReport& report) {
  const std::uint64_t row_bytes = layout.bytes_per_row();
  for (const std::uint64_t id : row_ids) {
    const Location loc = resolve(layout, id, requesting_device);
    switch (loc.tier) {
      case Tier::LocalHot:
        ++report.local_accesses;
        report.local_bytes += row_bytes;
        break;
      case Tier::InterleavedDevice:
        if (loc.device == requesting_device) {
          ++report.local_accesses;
          report.local_bytes += row_bytes;
        } else {
          ++report.peer_accesses;
          report.peer_bytes += row_bytes;
        }
        break;
      case Tier::ColdHost:
        ++report.host_accesses;
        report.host_bytes += row_bytes;
        break;
    }
  }
}

TrafficReport simulate_trace(const AccessCounter& counter, const TierLayout& layout) {
  validate_layout(layout);
  if (counter.counts.size() != layout.num_rows)
    throw DomainError("counter covers " + std::to_string(counter.counts.size()) +
                      " rows but the layout has " + std::to_string(layout.num_rows));
  if (counter.total == 0) throw DomainError("simulate_trace: counter total is zero");

  const std::uint64_t row_bytes = layout.bytes_per_row();
  const std::uint64_t devices = layout.num_devices;
  TrafficReport report;
  for (std::uint64_t row = 0; row < layout.num_rows; ++row) {
    const std::uint64_t c = counter.counts[row];
    if (c == 0) continue;
    const Location loc = resolve(layout, row, 0);
    switch (loc.tier) {
      case Tier::LocalHot:
        report.local_accesses += c;
        break;
      case Tier::InterleavedDevice: {
        // requesting devices cycle 0..D-1 per access; access r is local when
        // r % D equals the owning device
        const std::uint64_t local = c / devices + (loc.device < c % devices ? 1 : 0);
        report.local_accesses += local;
        report.peer_accesses += c - local;
        break;
      }
      case Tier::ColdHost:
        report.host_accesses += c;
        break;
    }
  }
  report.local_bytes = report.local_accesses * row_bytes;
  report.peer_bytes = report.peer_accesses * row_bytes;
  report.host_bytes = report.host_accesses * row_bytes;
  return report;
}

std::vector<std::uint64_t> counts_in_row_order(const AccessCounter& counter,
                                               std::span<const NodeId> ordering) {
  if (ordering.size() != counter.counts.size())
    throw DomainError("ordering length != counter length");
  std::vector<std::uint64_t> row_counts(ordering.size());
  for (std::uint64_t rank = 0; rank < ordering.size(); ++rank) {
    const NodeId u = ordering[rank];
    if (u >= counter.counts.size()) throw DomainError("ordering id out of range");
    row_counts[rank] = counter.counts[u];
  }
  return row_counts;
}

std::vector<SweepRow> hot_fraction_sweep(const AccessCounter& counter,
                                         std::span<const NodeId> ordering,
                                         std::span<const double> fractions,
                                         double replicated_fraction,
                                         std::uint32_t num_devices,
                                         std::uint64_t feature_dim,
                                         std::uint32_t elem_bytes,
                                         std::uint64_t per_device_budget_bytes) {
  for (std::size_t i = 1; i < fractions.size(); ++i)
    if (fractions[i] < fractions[i - 1])
      throw DomainError("sweep fractions must be sorted ascending");

  const AccessCounter row_counter = make_access_counter(counts_in_row_order(counter, ordering));
  std::vector<SweepRow> rows;
  rows.reserve(fractions.size());
  for (const double f : fractions) {
    SweepRow row;
    row.hot_fraction = f;
    row.replicated_fraction = std::min(replicated_fraction, f);
    row.layout = plan_layout(row_counter.counts.size(), f, row.replicated_fraction,
                             num_devices, feature_dim, elem_bytes, per_device_budget_bytes);
    row.report = simulate_trace(row_counter, row.layout);
    rows.push_back(row);
  }
  return rows;
}

void write_report_csv(std::span<const SweepRow> rows, const LinkCostModel& cost,
                      const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << std::setprecision(17);
  if (!rows.empty()) {
    const TierLayout& l = rows.front().layout;
    out << "# num_rows=" << l.num_rows << '\n'
        << "# num_devices=" << l.num_devices << '\n'
        << "# feature_dim=" << l.feature_dim << '\n'
        << "# elem_bytes=" << l.elem_bytes << '\n'
        << "# local_gbps=" << cost.local_gbps << '\n'
        << "# peer_gbps=" << cost.peer_gbps << '\n'
        << "# host_gbps=" << cost.host_gbps << '\n';
  }
  out << "hot_fraction,replicated_fraction,num_devices,total_accesses,local_accesses,"
         "peer_accesses,host_accesses,local_bytes,peer_bytes,host_bytes,hit_ratio,"
         "est_transfer_seconds\n";
  for (const SweepRow& row : rows) {
    const TrafficReport& r = row.report;
    out << row.hot_fraction << ',' << row.replicated_fraction << ',' << row.layout.num_devices
        << ',' << r.total_accesses() << ',' << r.local_accesses << ',' << r.peer_accesses
        << ',' << r.host_accesses << ',' << r.local_bytes << ',' << r.peer_bytes << ','
        << r.host_bytes << ',' << r.hit_ratio() << ',' << r.est_transfer_seconds(cost) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace tiergraph
