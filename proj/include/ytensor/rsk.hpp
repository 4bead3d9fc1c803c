#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ytensor/partition.hpp"

namespace ytensor {

/// Letters in [1, N].
struct Word {
  std::vector<int> letters;
  int alphabet = 1;
};

/// Insertion tableau of row insertion. Only P is kept; the recording
/// tableau is never needed since the samplers only report shapes.
class InsertionState {
 public:
  /// Bumps the leftmost entry strictly greater than `value` in each row.
  void insert(int value);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;

  /// Rows weakly increasing, columns strictly increasing, shape a partition.
  bool valid() const;

 private:
  std::vector<std::vector<int>> rows_;
};

Partition rsk_shape(std::span<const int> word);
inline Partition rsk_shape(const Word& w) { return rsk_shape(w.letters); }

/// Shape of the insertion tableau of a uniform random word in [1,N]^n,
/// i.e. a draw from P_N^n. Trial k uses stream (seed, first_stream + k).
Partition sample_schur_weyl_one(int n, int N, std::uint64_t seed, std::uint64_t stream);

/// Robinson-Schensted shape of a uniform random permutation (Fisher-Yates).
Partition sample_plancherel_one(int n, std::uint64_t seed, std::uint64_t stream);

/// `count` i.i.d. shapes; output order is by trial index and independent of
/// the number of workers.
std::vector<Partition> sample_schur_weyl(int n, int N, std::uint64_t seed, std::size_t count, unsigned workers = 1);
std::vector<Partition> sample_plancherel(int n, std::uint64_t seed, std::size_t count, unsigned workers = 1);

/// Header "# n=<n> N=<N> seed=<seed> count=<count>" then one partition per line.
void write_sample_dump(std::ostream& os, int n, int N, std::uint64_t seed, const std::vector<Partition>& samples);

}  // namespace ytensor
