#include "ytensor/rsk.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ytensor/parallel.hpp"
#include "ytensor/rng.hpp"

namespace ytensor {

void InsertionState::insert(int value) {
  for (auto& row : rows_) {
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return;
    }
    std::swap(*it, value);
  }
  rows_.push_back({value});
}

Partition InsertionState::shape() const {
  std::vector<int> lengths;
  lengths.reserve(rows_.size());
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lengths));
}

bool InsertionState::valid() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.empty() || !std::is_sorted(row.begin(), row.end())) return false;
    if (i == 0) continue;
    const auto& above = rows_[i - 1];
    if (row.size() > above.size()) return false;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] <= above[j]) return false;
  }
  return true;
}

Partition rsk_shape(std::span<const int> word) {
  InsertionState state;
  for (int letter : word) {
    state.insert(letter);
    assert(state.valid());
  }
  return state.shape();
}

Partition sample_schur_weyl_one(int n, int N, std::uint64_t seed, std::uint64_t stream) {
  if (n < 1 || N < 1) throw std::invalid_argument("sampling needs n >= 1 and N >= 1");
  SplitMix64 rng(seed, stream);
  InsertionState state;
  for (int k = 0; k < n; ++k) state.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(N))) + 1);
  return state.shape();
}

Partition sample_plancherel_one(int n, std::uint64_t seed, std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("sampling needs n >= 1");
  SplitMix64 rng(seed, stream);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (std::size_t i = perm.size() - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.below(i + 1))]);
  return rsk_shape(perm);
}

std::vector<Partition> sample_schur_weyl(int n, int N, std::uint64_t seed, std::size_t count, unsigned workers) {
  std::vector<Partition> out(count);
  parallel_for(count, workers, [&](std::size_t k) { out[k] = sample_schur_weyl_one(n, N, seed, k); });
  return out;
}

std::vector<Partition> sample_plancherel(int n, std::uint64_t seed, std::size_t count, unsigned workers) {
  std::vector<Partition> out(count);
  parallel_for(count, workers, [&](std::size_t k) { out[k] = sample_plancherel_one(n, seed, k); });
  return out;
}

void write_sample_dump(std::ostream& os, int n, int N, std::uint64_t seed, const std::vector<Partition>& samples) {
  os << "# n=" << n << " N=" << N << " seed=" << seed << " count=" << samples.size() << '\n';
  for (const auto& p : samples) os << p.to_string() << '\n';
}

}  // namespace ytensor
