#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ytensor/partition.hpp"

namespace ytensor {

/// Maximal run of equal slope, in grid units [begin, end).
struct Segment {
  int begin = 0;
  int end = 0;
  int slope = 0;
};

/// Rotated boundary of a Young diagram scaled to area 1/2.
///
/// The boundary lives on the integer grid X = k / (2 sqrt n): the corner of
/// row i sits at grid index lambda_i - i and every unit interval carries a
/// slope of +1 or -1. Heights are stored in grid units, so all identities on
/// the grid (area, corners) are exact integers; the factor 1/(2 sqrt n) is
/// applied only when converting to real coordinates.
class Profile {
 public:
  /// Throws std::invalid_argument for the empty partition.
  explicit Profile(const Partition& lambda);

  /// Builds a profile from a slope walk starting at grid index `left`.
  /// The walk must start at height |left| and end on the diagonal.
  static Profile from_slopes(int left, std::vector<std::int8_t> slopes);

  std::int64_t cells() const { return n_; }
  double step() const { return step_; }
  int left_index() const { return left_; }
  int right_index() const { return left_ + static_cast<int>(slopes_.size()); }
  double support_left() const { return left_ * step_; }
  double support_right() const { return right_index() * step_; }
  const std::vector<std::int8_t>& slopes() const { return slopes_; }

  /// Height in grid units at integer grid index k.
  std::int64_t grid_height(int k) const;

  /// Exact integral of (L - |X|) over the grid, in grid units squared.
  /// Equals 2n, i.e. area 1/2 after scaling.
  std::int64_t grid_area() const;

  std::vector<Segment> segments() const;

  /// Grid indices where the slope changes, plus both support ends.
  std::vector<int> corner_indices() const;

  Partition to_partition() const;

  double operator()(double X) const;

 private:
  Profile() = default;
  void finish();

  std::int64_t n_ = 0;
  double step_ = 0.0;
  int left_ = 0;
  std::vector<std::int8_t> slopes_;
  std::vector<std::int64_t> heights_;
};

inline double evaluate(const Profile& profile, double X) { return profile(X); }

/// CSV with header "X,L", one line per corner.
void write_profile_csv(std::ostream& os, const Profile& profile);

}  // namespace ytensor
