#pragma once

#include "bifnet/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bifnet {

/// Reads the temporal edge-list format: a `# nodes=N steps=T` header, then
/// one `t u v w` record per line (w optional, default 1.0). Steps without
/// records become empty snapshots. Rejects self-loops, non-positive weights,
/// out-of-range indices, and duplicate (t, u, v) records, naming the line.
TemporalSequence read_temporal(const std::string& path);
TemporalSequence read_temporal(std::istream& in, const std::string& name);

/// Inverse of read_temporal; requires timestamps to be exactly 0..T-1.
void write_temporal(const TemporalSequence& seq, const std::string& path);

/// Shortest `%.17g` rendering; round-trips doubles, prints nan/inf as such.
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text(const std::string& path, const std::string& content);

}  // namespace bifnet
