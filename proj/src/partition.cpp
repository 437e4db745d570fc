#include "rootgame/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rootgame {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] < 0) throw std::invalid_argument("negative row length");
    if (k > 0 && rows_[k] < rows_[k - 1]) {
      throw std::invalid_argument("row lengths must weakly increase downward (French convention)");
    }
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> rows;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    rows.push_back(v);
  }
  return Partition(std::move(rows));
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    if (*it > 0) out.push_back(*it);
  return out;
}

Partition Partition::padded(int rows) const {
  if (rows <= row_count()) return *this;
  std::vector<int> out(rows - row_count(), 0);
  out.insert(out.end(), rows_.begin(), rows_.end());
  return Partition(std::move(out));
}

Partition Partition::shifted(int N) const {
  if (N < 0) throw std::invalid_argument("shift must be nonnegative");
  std::vector<int> out(rows_);
  for (int& r : out) r += N;
  return Partition(std::move(out));
}

bool Partition::fits(int rows, int cols) const {
  const auto p = parts();
  return static_cast<int>(p.size()) <= rows && (p.empty() || p.front() <= cols);
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits(rows, cols)) throw std::invalid_argument("partition does not fit the rectangle");
  const Partition full = padded(rows);
  const int start = full.row_count() - rows;
  std::vector<int> out(rows);
  for (int a = 0; a < rows; ++a) out[a] = cols - full.rows_[start + rows - 1 - a];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  const auto outer_parts = parts();
  const auto inner_parts = inner.parts();
  if (inner_parts.size() > outer_parts.size()) return false;
  for (std::size_t k = 0; k < inner_parts.size(); ++k)
    if (inner_parts[k] > outer_parts[k]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(rows_[k]);
  }
  return out + ")";
}

SkewShape::SkewShape(Partition outer, Partition inner) {
  const int rows = std::max(outer.row_count(), inner.row_count());
  outer_ = outer.padded(rows);
  inner_ = inner.padded(rows);
  valid_ = outer_.contains(inner_);
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  if (!valid_) return out;
  for (int r = 1; r <= row_count(); ++r)
    for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.push_back({r, c});
  return out;
}

bool SkewShape::contains(Box b) const {
  return valid_ && b.row >= 1 && b.row <= row_count() && b.col > inner_.row(b.row) && b.col <= outer_.row(b.row);
}

std::vector<Box> boxes_of(const Partition& shape) {
  std::vector<Box> out;
  for (int r = 1; r <= shape.row_count(); ++r)
    for (int c = 1; c <= shape.row(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int cap) {
    out.push_back(Partition::from_parts(current));
    if (static_cast<int>(current.size()) == rows) return;
    for (int v = 1; v <= cap; ++v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
    }
  };
  rec(cols);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace rootgame
