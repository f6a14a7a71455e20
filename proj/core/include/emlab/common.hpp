#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace emlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Complex 3-vector, used by the spectral machinery and the bivector fields.
struct CVec3 {
  Complex x{0, 0}, y{0, 0}, z{0, 0};

  Complex& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const Complex& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  CVec3& operator+=(const CVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  CVec3& operator-=(const CVec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  CVec3& operator*=(Complex s) { x *= s; y *= s; z *= s; return *this; }
};

inline CVec3 operator+(CVec3 a, const CVec3& b) { return a += b; }
inline CVec3 operator-(CVec3 a, const CVec3& b) { return a -= b; }
inline CVec3 operator*(Complex s, CVec3 a) { return a *= s; }
inline CVec3 operator*(double s, CVec3 a) { return a *= Complex(s, 0); }

inline CVec3 conj(const CVec3& a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }
inline CVec3 to_cvec(const Vec3& a) { return {Complex(a.x, 0), Complex(a.y, 0), Complex(a.z, 0)}; }

inline Complex dotc(const Vec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline CVec3 cross(const Vec3& a, const CVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const CVec3& a) {
  return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

// Global worker-thread count for the data-parallel sweeps (per-mode and
// per-point loops with no shared mutable state). Default 1.
int worker_threads();
void set_worker_threads(int n);

// Chunked parallel map over [0, count). Chunk boundaries depend only on
// `threads`, so reductions built on fixed per-chunk partials stay
// bit-reproducible for a given thread count.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads <= 1 || count < 2048) {
    body(0, count);
    return;
  }
  const std::size_t nchunk = static_cast<std::size_t>(threads);
  std::vector<std::thread> pool;
  pool.reserve(nchunk);
  for (std::size_t c = 0; c < nchunk; ++c) {
    const std::size_t lo = count * c / nchunk;
    const std::size_t hi = count * (c + 1) / nchunk;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace emlab
