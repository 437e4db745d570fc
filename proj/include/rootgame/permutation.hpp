#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rootgame {

/// A permutation of {1..n} in one-line notation, pi(1) pi(2) ... pi(n).
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);

  /// Accepts "3426175" (one digit per entry, n <= 9) or "5,6,8,1,2,3,4,7,9,10".
  static Permutation parse(std::string_view text);

  /// Inverse of code(): the permutation whose Lehmer code is `code`.
  /// The result has size max(code.size(), max_i(i + code[i])) so that every
  /// code is realizable.
  static Permutation from_code(std::span<const int> code);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int position) const { return images_[position - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Number of inversions, #{(i,j) : i < j, pi(i) > pi(j)}.
  int length() const;

  /// Lehmer code: c_i = #{j > i : pi(j) < pi(i)}.
  std::vector<int> code() const;

  Permutation inverse() const;

  /// w0 * pi, i.e. i -> n + 1 - pi(i).
  Permutation times_longest_left() const;

  /// pi * t_ab: swaps the entries in positions a and b.
  Permutation swap_positions(int a, int b) const;

  /// Drops trailing fixed points so permutations of different ambient sizes
  /// compare equal when they agree as elements of S_infinity.
  Permutation trimmed() const;

  /// Embeds into S_n by appending fixed points. Requires n >= size().
  Permutation extended(int n) const;

  std::string to_string() const;

  /// Digits run together, two-digit values in parentheses: "246135789(10)".
  std::string to_display() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace rootgame
