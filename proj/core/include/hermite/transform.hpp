#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "hermite/types.hpp"
#include "hermite/vec.hpp"

namespace hermite {

/// An orientation-preserving similarity of R^n: x -> scale * R x + translation
/// with R orthogonal.  Construction validates orthogonality to 1e-12.
class SimilarityTransform {
public:
  SimilarityTransform(std::vector<double> rotation_row_major, Vec translation,
                      double scale);

  static SimilarityTransform identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double scale() const { return scale_; }
  const Vec& translation() const { return translation_; }
  const std::vector<double>& rotation() const { return rot_; }

  /// Apply the full map to a point.
  Vec map_point(const Vec& p) const;
  /// Apply the rotation only (the derivative of the map, normalized).
  Vec rotate(const Vec& v) const;

private:
  std::vector<double> rot_;  // n x n, row major
  Vec translation_;
  double scale_;
  std::size_t dim_;
};

/// Transform every element: points through the full map, tangents through
/// the rotation alone (unit length is preserved).
HermiteSequence apply_transform(const HermiteSequence& s, const SimilarityTransform& t);

/// A uniformly random rotation matrix (row major, determinant +1) produced by
/// orthonormalizing a Gaussian matrix.
std::vector<double> random_rotation(std::size_t dim, std::mt19937_64& rng);

}  // namespace hermite
