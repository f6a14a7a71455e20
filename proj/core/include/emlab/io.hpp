#pragma once

#include <iosfwd>
#include <string>

#include "emlab/grid.hpp"

namespace emlab {

// Self-describing binary snapshot: magic "EMF1", u32 n, u32 component count,
// f64 h, f64 c, then n^3 * ncomp little-endian f64 values, row-major
// (z fastest), components interleaved per site.
void write_snapshot(const std::string& path, const ScalarFieldGrid& f);
void write_snapshot(const std::string& path, const VectorFieldGrid& f);

struct Snapshot {
  GridSpec spec;
  int components = 0;            // 1 or 3
  ScalarFieldGrid scalar;        // filled when components == 1
  VectorFieldGrid vector;        // filled when components == 3
};

Snapshot read_snapshot(const std::string& path);

// Plain CSV for plotting: x,y,z,f or x,y,z,fx,fy,fz with 17 significant
// digits (shortest round-trip).
void write_csv(const std::string& path, const ScalarFieldGrid& f);
void write_csv(const std::string& path, const VectorFieldGrid& f);

std::string format_float(double v);  // %.17g

}  // namespace emlab
