#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubpart/core.hpp"
#include "cubpart/datasets.hpp"
#include "cubpart/engine.hpp"

namespace cubpart {

// Instance files are JSON of the form
//   {"n": int, "constant": float,
//    "pairs": [[p, q, cost], ...], "triples": [[p, q, r, cost], ...]}
// with 0-based indices, p < q < r, and omitted entries meaning cost 0.

CostFunction read_instance_json(std::istream& in);
CostFunction read_instance_file(const std::string& path);

/// Writes the sparse form: zero entries are omitted.
void write_instance_json(std::ostream& out, const CostFunction& c);
void write_instance_file(const std::string& path, const CostFunction& c);

std::string report_to_json(const RunReport& report);

/// Point cloud CSV with header x,y,vertex_id.
void write_points_csv(std::ostream& out, const std::vector<Point>& points,
                      const std::vector<int>& vertex_of);

} // namespace cubpart
