#include "ytensor/partition.hpp"

#include <charconv>
#include <stdexcept>

namespace ytensor {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] <= 0) throw std::invalid_argument("partition rows must be positive");
    if (k > 0 && rows_[k] > rows_[k - 1])
      throw std::invalid_argument("partition rows must be nonincreasing");
    n_ += rows_[k];
  }
  if (!rows_.empty()) {
    columns_.assign(static_cast<std::size_t>(rows_.front()), 0);
    for (int len : rows_)
      for (int j = 0; j < len; ++j) ++columns_[static_cast<std::size_t>(j)];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> rows;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition{};
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = trim(text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
    rows.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(rows));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= height(); ++i)
    for (int j = 1; j <= rows_[static_cast<std::size_t>(i - 1)]; ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(rows_[k]);
  }
  return out;
}

int hook_length(const Partition& lambda, Cell cell) {
  if (!lambda.contains(cell)) throw std::out_of_range("cell not in diagram");
  const int arm = lambda.row(cell.i) - cell.j;
  const int leg = lambda.column(cell.j) - cell.i;
  return arm + leg + 1;
}

std::int64_t shifted_content(const Partition& lambda, std::int64_t N, Cell cell) {
  if (!lambda.contains(cell)) throw std::out_of_range("cell not in diagram");
  return N + content(cell);
}

}  // namespace ytensor
