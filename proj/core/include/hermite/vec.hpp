#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hermite/errors.hpp"

namespace hermite {

/// Distance below which two points are considered coincident.
inline constexpr double kCoincidenceTol = 1e-14;

/// Magnitude below which a vector cannot be normalized.
inline constexpr double kNormalizeTol = 1e-12;

/// A point or direction in R^n (n >= 2), dense double coordinates.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t n) : c_(n, 0.0) {}
  Vec(std::initializer_list<double> xs) : c_(xs) {}
  explicit Vec(std::vector<double> xs) : c_(std::move(xs)) {}

  std::size_t dim() const { return c_.size(); }
  double& operator[](std::size_t i) { return c_[i]; }
  double operator[](std::size_t i) const { return c_[i]; }
  const std::vector<double>& coords() const { return c_; }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

private:
  std::vector<double> c_;
};

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(double s, Vec a) { return a *= s; }
inline Vec operator*(Vec a, double s) { return a *= s; }

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

/// Clamp an inner product of unit vectors into the domain of std::acos.
inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

/// A direction on the unit sphere S^{n-1}.  The constructor normalizes its
/// input and rejects vectors of near-zero magnitude.
class UnitVec {
public:
  explicit UnitVec(const Vec& v) : v_(v) {
    const double n = norm(v);
    if (!(n > kNormalizeTol)) {
      throw VanishingTangent("cannot normalize a near-zero vector (norm " +
                             std::to_string(n) + ")");
    }
    v_ *= 1.0 / n;
  }

  std::size_t dim() const { return v_.dim(); }
  double operator[](std::size_t i) const { return v_[i]; }
  const Vec& vec() const { return v_; }

  friend bool operator==(const UnitVec& a, const UnitVec& b) { return a.v_ == b.v_; }

private:
  Vec v_;
};

inline double dot(const UnitVec& a, const UnitVec& b) { return dot(a.vec(), b.vec()); }

/// Angle in [0, pi] between two unit vectors (the angular metric on the sphere).
inline double angular_distance(const UnitVec& a, const UnitVec& b) {
  return std::acos(clamp_unit(dot(a, b)));
}

}  // namespace hermite
