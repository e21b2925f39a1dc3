#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hermite/errors.hpp"
#include "hermite/vec.hpp"

namespace hermite {

/// A point in R^n coupled with a unit tangent direction.
struct HermitePair {
  HermitePair(Vec point, UnitVec tangent)
      : point(std::move(point)), tangent(std::move(tangent)) {
    if (this->point.dim() != this->tangent.dim()) {
      throw ParameterError("point and tangent dimensions disagree");
    }
    if (this->point.dim() < 2) {
      throw ParameterError("ambient dimension must be at least 2");
    }
  }

  Vec point;
  UnitVec tangent;

  std::size_t dim() const { return point.dim(); }

  friend bool operator==(const HermitePair& a, const HermitePair& b) {
    return a.point == b.point && a.tangent == b.tangent;
  }
};

enum class Topology { Open, Closed };

/// An ordered list of Hermite elements with open or closed topology — the
/// state refined by the subdivision schemes.  Invariants checked on
/// construction: at least two elements, uniform dimension, and consecutive
/// points distinct (including, for closed topology, the wrap-around pair).
class HermiteSequence {
public:
  HermiteSequence(std::vector<HermitePair> pairs, Topology topology)
      : pairs_(std::move(pairs)), topology_(topology) {
    if (pairs_.size() < 2) {
      throw ParameterError("a Hermite sequence needs at least 2 elements");
    }
    const std::size_t n = pairs_.front().dim();
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
      if (pairs_[j].dim() != n) {
        throw ParameterError("mixed dimensions in Hermite sequence at index " +
                             std::to_string(j));
      }
    }
    const std::size_t last = pairs_.size() - 1;
    for (std::size_t j = 0; j < last; ++j) {
      if (distance(pairs_[j].point, pairs_[j + 1].point) <= kCoincidenceTol) {
        throw CoincidentPoints("consecutive points coincide at index " +
                               std::to_string(j));
      }
    }
    if (topology_ == Topology::Closed &&
        distance(pairs_[last].point, pairs_[0].point) <= kCoincidenceTol) {
      throw CoincidentPoints("closed sequence: wrap-around points coincide at index " +
                             std::to_string(last));
    }
  }

  std::size_t size() const { return pairs_.size(); }
  std::size_t dim() const { return pairs_.front().dim(); }
  Topology topology() const { return topology_; }
  const HermitePair& operator[](std::size_t j) const { return pairs_[j]; }
  const std::vector<HermitePair>& pairs() const { return pairs_; }

  /// Number of consecutive (possibly wrapping) index pairs.
  std::size_t segment_count() const {
    return topology_ == Topology::Closed ? pairs_.size() : pairs_.size() - 1;
  }

  /// The points only, in order.
  std::vector<Vec> points() const {
    std::vector<Vec> out;
    out.reserve(pairs_.size());
    for (const auto& p : pairs_) out.push_back(p.point);
    return out;
  }

private:
  std::vector<HermitePair> pairs_;
  Topology topology_;
};

}  // namespace hermite
