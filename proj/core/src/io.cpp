#include "emlab/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace emlab {
namespace {

constexpr char kMagic[4] = {'E', 'M', 'F', '1'};

static_assert(std::endian::native == std::endian::little,
              "snapshot writer assumes a little-endian host");

void write_header(std::ofstream& out, const GridSpec& spec, std::uint32_t ncomp) {
  out.write(kMagic, 4);
  const std::uint32_t n = static_cast<std::uint32_t>(spec.n);
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&ncomp), sizeof ncomp);
  out.write(reinterpret_cast<const char*>(&spec.h), sizeof spec.h);
  out.write(reinterpret_cast<const char*>(&spec.c), sizeof spec.c);
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_snapshot(const std::string& path, const ScalarFieldGrid& f) {
  auto out = open_out(path, std::ios::binary);
  write_header(out, f.spec, 1);
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
}

void write_snapshot(const std::string& path, const VectorFieldGrid& f) {
  auto out = open_out(path, std::ios::binary);
  write_header(out, f.spec, 3);
  for (const Vec3& v : f.values) {
    const double comp[3] = {v.x, v.y, v.z};
    out.write(reinterpret_cast<const char*>(comp), sizeof comp);
  }
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not an EMF1 snapshot: " + path);

  std::uint32_t n = 0, ncomp = 0;
  double h = 0, c = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&ncomp), sizeof ncomp);
  in.read(reinterpret_cast<char*>(&h), sizeof h);
  in.read(reinterpret_cast<char*>(&c), sizeof c);
  if (!in || (ncomp != 1 && ncomp != 3)) throw std::runtime_error("corrupt snapshot header: " + path);

  Snapshot snap;
  snap.spec = GridSpec{static_cast<int>(n), h, c};
  snap.spec.validate();
  snap.components = static_cast<int>(ncomp);
  const std::size_t count = snap.spec.size();
  if (ncomp == 1) {
    snap.scalar = ScalarFieldGrid(snap.spec);
    in.read(reinterpret_cast<char*>(snap.scalar.values.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
  } else {
    snap.vector = VectorFieldGrid(snap.spec);
    for (std::size_t i = 0; i < count; ++i) {
      double comp[3];
      in.read(reinterpret_cast<char*>(comp), sizeof comp);
      snap.vector.values[i] = {comp[0], comp[1], comp[2]};
    }
  }
  if (!in) throw std::runtime_error("truncated snapshot body: " + path);
  return snap;
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const ScalarFieldGrid& f) {
  auto out = open_out(path, std::ios::out);
  out << "x,y,z,f\n";
  const GridSpec& g = f.spec;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const Vec3 p = g.point(ix, iy, iz);
        out << format_float(p.x) << ',' << format_float(p.y) << ',' << format_float(p.z) << ','
            << format_float(f.at(ix, iy, iz)) << '\n';
      }
}

void write_csv(const std::string& path, const VectorFieldGrid& f) {
  auto out = open_out(path, std::ios::out);
  out << "x,y,z,fx,fy,fz\n";
  const GridSpec& g = f.spec;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy)
      for (int iz = 0; iz < g.n; ++iz) {
        const Vec3 p = g.point(ix, iy, iz);
        const Vec3& v = f.at(ix, iy, iz);
        out << format_float(p.x) << ',' << format_float(p.y) << ',' << format_float(p.z) << ','
            << format_float(v.x) << ',' << format_float(v.y) << ',' << format_float(v.z) << '\n';
      }
}

}  // namespace emlab
