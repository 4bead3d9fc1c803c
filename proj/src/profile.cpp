#include "ytensor/profile.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "ytensor/format.hpp"

namespace ytensor {

Profile::Profile(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("profile of the empty partition is undefined");
  const int r = lambda.height();
  left_ = -r;
  slopes_.reserve(static_cast<std::size_t>(lambda.width() + r));
  for (int i = r; i >= 1; --i) {
    const int run = lambda.row(i) - lambda.row(i + 1);
    slopes_.insert(slopes_.end(), static_cast<std::size_t>(run), std::int8_t{1});
    slopes_.push_back(-1);
  }
  finish();
}

Profile Profile::from_slopes(int left, std::vector<std::int8_t> slopes) {
  Profile p;
  p.left_ = left;
  p.slopes_ = std::move(slopes);
  for (auto s : p.slopes_)
    if (s != 1 && s != -1) throw std::invalid_argument("profile slopes must be +-1");
  p.finish();
  if (p.heights_.back() != std::abs(static_cast<std::int64_t>(p.right_index())))
    throw std::invalid_argument("slope walk does not return to the diagonal");
  if (p.n_ <= 0) throw std::invalid_argument("slope walk encloses no cells");
  return p;
}

void Profile::finish() {
  heights_.resize(slopes_.size() + 1);
  heights_[0] = std::abs(static_cast<std::int64_t>(left_));
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    heights_[k + 1] = heights_[k] + slopes_[k];
    const std::int64_t x = left_ + static_cast<std::int64_t>(k) + 1;
    if (heights_[k + 1] < std::abs(x)) throw std::invalid_argument("slope walk dips below |X|");
  }
  n_ = grid_area() / 2;
  step_ = n_ > 0 ? 0.5 / std::sqrt(static_cast<double>(n_)) : 0.0;
}

std::int64_t Profile::grid_height(int k) const {
  if (k <= left_ || k >= right_index()) return std::abs(static_cast<std::int64_t>(k));
  return heights_[static_cast<std::size_t>(k - left_)];
}

std::int64_t Profile::grid_area() const {
  // Trapezoid rule is exact on each unit interval; the sum of doubled
  // trapezoids is 2 * area, an integer.
  std::int64_t twice = 0;
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    const std::int64_t x0 = left_ + static_cast<std::int64_t>(k);
    twice += heights_[k] + heights_[k + 1] - std::abs(x0) - std::abs(x0 + 1);
  }
  return twice / 2;
}

std::vector<Segment> Profile::segments() const {
  std::vector<Segment> out;
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    const int x = left_ + static_cast<int>(k);
    if (!out.empty() && out.back().slope == slopes_[k])
      out.back().end = x + 1;
    else
      out.push_back({x, x + 1, slopes_[k]});
  }
  return out;
}

std::vector<int> Profile::corner_indices() const {
  std::vector<int> out;
  for (const auto& s : segments()) out.push_back(s.begin);
  out.push_back(right_index());
  return out;
}

Partition Profile::to_partition() const {
  // Up-steps walk right along a row top, down-steps close a row.
  std::vector<int> rows(static_cast<std::size_t>(-std::min(left_, 0)), 0);
  int x = 0;
  int y = -left_;
  for (auto s : slopes_) {
    if (s > 0) {
      ++x;
    } else {
      if (y <= 0) throw std::invalid_argument("slope walk descends below the axis");
      rows[static_cast<std::size_t>(y - 1)] = x;
      --y;
    }
  }
  return Partition(std::move(rows));
}

double Profile::operator()(double X) const {
  const double k = X / step_;
  if (!(k > left_) || !(k < right_index())) return std::abs(X);
  const double fl = std::floor(k);
  const auto idx = static_cast<std::size_t>(static_cast<int>(fl) - left_);
  const double frac = k - fl;
  const double h = static_cast<double>(heights_[idx]) + frac * slopes_[idx];
  return h * step_;
}

void write_profile_csv(std::ostream& os, const Profile& profile) {
  os << "X,L\n";
  for (int k : profile.corner_indices())
    os << format_double(k * profile.step()) << ',' << format_double(profile.grid_height(k) * profile.step())
       << '\n';
}

}  // namespace ytensor
