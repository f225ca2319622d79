#pragma once

#include <string>

#include "eee/grid.hpp"

// Snapshot files.
//
// Binary layout (native little-endian):
//   char[8]  "EEESNAP1"
//   uint32   n, fd_order
//   float64  h, t
//   uint32   number of fields, then per field: uint32 length + name bytes
//   float64  values, point-major: for each point (axis 1 fastest) all fields
namespace eee {

void write_snapshot(const std::string& path, const FieldSet& fs);
// Throws std::runtime_error on malformed files.
FieldSet read_snapshot(const std::string& path);

// One row per point: i, j, k, then all fields by name.
void write_snapshot_csv(const std::string& path, const FieldSet& fs);

// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace eee
