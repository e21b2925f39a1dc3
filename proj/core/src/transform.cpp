#include "hermite/transform.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace hermite {

namespace {
constexpr double kOrthoTol = 1e-12;

// Determinant by Gaussian elimination with partial pivoting (n is small).
double det(std::vector<double> m, std::size_t n) {
  double d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      d = -d;
    }
    const double p = m[k * n + k];
    if (p == 0.0) return 0.0;
    d *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / p;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return d;
}
}  // namespace

SimilarityTransform::SimilarityTransform(std::vector<double> rotation_row_major,
                                         Vec translation, double scale)
    : rot_(std::move(rotation_row_major)),
      translation_(std::move(translation)),
      scale_(scale),
      dim_(translation_.dim()) {
  if (dim_ < 2) throw ParameterError("transform dimension must be at least 2");
  if (rot_.size() != dim_ * dim_) {
    throw ParameterError("rotation matrix size does not match dimension");
  }
  if (!(scale_ > 0.0)) throw ParameterError("scale must be positive");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) s += rot_[k * dim_ + i] * rot_[k * dim_ + j];
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(s - expect) > kOrthoTol) {
        char dev[32];
        std::snprintf(dev, sizeof(dev), "%.3g", std::abs(s - expect));
        throw ParameterError(
            std::string("rotation matrix is not orthogonal (R^T R deviates by ") +
            dev + ")");
      }
    }
  }
}

SimilarityTransform SimilarityTransform::identity(std::size_t dim) {
  std::vector<double> r(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) r[i * dim + i] = 1.0;
  return SimilarityTransform(std::move(r), Vec(dim), 1.0);
}

Vec SimilarityTransform::rotate(const Vec& v) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += rot_[i * dim_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

Vec SimilarityTransform::map_point(const Vec& p) const {
  return scale_ * rotate(p) + translation_;
}

HermiteSequence apply_transform(const HermiteSequence& s, const SimilarityTransform& t) {
  if (s.dim() != t.dim()) throw ParameterError("transform and sequence dimensions disagree");
  std::vector<HermitePair> out;
  out.reserve(s.size());
  for (const HermitePair& p : s.pairs()) {
    out.emplace_back(t.map_point(p.point), UnitVec(t.rotate(p.tangent.vec())));
  }
  return HermiteSequence(std::move(out), s.topology());
}

std::vector<double> random_rotation(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> m(dim * dim);
  // Gram-Schmidt on Gaussian rows, retrying on near-dependence.
  for (std::size_t i = 0; i < dim; ++i) {
    while (true) {
      Vec row(dim);
      for (std::size_t j = 0; j < dim; ++j) row[j] = gauss(rng);
      // A second projection pass keeps the result orthogonal to machine
      // precision even when the draw starts out nearly dependent on the
      // earlier rows; one pass can leave a residual near the tolerance the
      // transform constructor enforces.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < i; ++k) {
          double proj = 0.0;
          for (std::size_t j = 0; j < dim; ++j) proj += m[k * dim + j] * row[j];
          for (std::size_t j = 0; j < dim; ++j) row[j] -= proj * m[k * dim + j];
        }
      }
      const double n = norm(row);
      if (n > 1e-3) {
        for (std::size_t j = 0; j < dim; ++j) m[i * dim + j] = row[j] / n;
        break;
      }
    }
  }
  if (det(m, dim) < 0.0) {
    for (std::size_t j = 0; j < dim; ++j) m[j] = -m[j];  // flip the first row
  }
  return m;
}

}  // namespace hermite
