#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ytensor {

/// A cell of a Young diagram, 1-based: row i, column j.
struct Cell {
  int i = 1;
  int j = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Young diagram stored as its nonincreasing positive row lengths.
///
/// The conjugate (column lengths) is computed once at construction so that
/// leg lengths are O(1). Instances are immutable.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless rows are positive and nonincreasing.
  /// Trailing zeros are accepted and dropped.
  explicit Partition(std::vector<int> rows);

  /// Parses "9,7,6,4,3,2". The empty string yields the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& columns() const { return columns_; }
  std::int64_t size() const { return n_; }
  int height() const { return static_cast<int>(rows_.size()); }
  int width() const { return rows_.empty() ? 0 : rows_.front(); }
  bool empty() const { return rows_.empty(); }

  int row(int i) const { return i >= 1 && i <= height() ? rows_[i - 1] : 0; }
  int column(int j) const { return j >= 1 && j <= width() ? columns_[j - 1] : 0; }

  bool contains(Cell cell) const { return cell.i >= 1 && cell.j >= 1 && cell.j <= row(cell.i); }

  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  Partition conjugate() const { return Partition(columns_); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
  std::vector<int> columns_;
  std::int64_t n_ = 0;
};

/// arm + leg + 1. Throws std::out_of_range if the cell is not in the diagram.
int hook_length(const Partition& lambda, Cell cell);

/// N + j - i. Throws std::out_of_range if the cell is not in the diagram.
std::int64_t shifted_content(const Partition& lambda, std::int64_t N, Cell cell);

inline int content(Cell cell) { return cell.j - cell.i; }

}  // namespace ytensor
