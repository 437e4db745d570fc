#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rootgame {

/// A Young diagram in the French convention: rows are left justified and
/// weakly increase in length going down. rows()[0] is the top row. A fixed
/// number of rows is kept, so rows of length 0 are allowed.
///
/// Equality and ordering ignore empty rows, so (0,1,2) == (1,2).
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless rows are nonnegative and weakly increasing.
  explicit Partition(std::vector<int> rows);

  /// From conventional (weakly decreasing) parts.
  static Partition from_parts(std::vector<int> parts);

  /// "1,2,3" (top row first). The empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  /// Length of row i, counted from the top starting at 1.
  int row(int i) const { return rows_[i - 1]; }
  int size() const;
  bool empty() const { return size() == 0; }
  int widest() const { return rows_.empty() ? 0 : rows_.back(); }

  /// Nonzero row lengths, longest first.
  std::vector<int> parts() const;

  /// Adds rows of length 0 at the top until there are `rows` rows.
  Partition padded(int rows) const;

  /// Adds N boxes to every row, including empty ones.
  Partition shifted(int N) const;

  bool fits(int rows, int cols) const;

  /// Complement inside a rows x cols rectangle, turned upside down so it is
  /// again a French diagram with `rows` rows.
  Partition complement(int rows, int cols) const;

  /// True when `inner` fits inside this diagram with bottom rows aligned.
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts() == other.parts(); }
  std::strong_ordering operator<=>(const Partition& other) const { return parts() <=> other.parts(); }

 private:
  std::vector<int> rows_;
};

/// A box of a diagram: row counted from the top (1-based), column from the left.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

/// outer / inner with both padded to the same row count.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int row_count() const { return outer_.row_count(); }
  int size() const { return outer_.size() - inner_.size(); }
  bool valid() const { return valid_; }

  /// Boxes in lexicographic (row-major) order.
  std::vector<Box> boxes() const;
  bool contains(Box b) const;

 private:
  Partition outer_;
  Partition inner_;
  bool valid_ = true;
};

/// Boxes of a straight shape in lexicographic order.
std::vector<Box> boxes_of(const Partition& shape);

/// Every partition fitting inside a rows x cols box, ascending by size.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace rootgame
