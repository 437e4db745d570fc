#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rootgame/partition.hpp"

namespace rootgame {

/// A word over {0,1}; indexes a Schubert class on Gr_l(n), l = number of ones.
class ZeroOneString {
 public:
  ZeroOneString() = default;

  /// Throws std::invalid_argument on an empty word or a character other than 0/1.
  explicit ZeroOneString(std::string word);

  /// The word 0^zeros 1^ones.
  static ZeroOneString identity(int zeros, int ones);

  /// Inverse of shape_of_string for a shape with `zeros` rows of width <= ones.
  static ZeroOneString from_shape(const Partition& shape, int zeros, int ones);

  /// All words with the given number of zeros and ones, in lexicographic order.
  static std::vector<ZeroOneString> all(int zeros, int ones);

  const std::string& str() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int ones() const;
  int zeros() const { return size() - ones(); }
  bool at(int position) const { return word_[position - 1] == '1'; }

  /// 1-based positions of the zeros (resp. ones), ascending.
  std::vector<int> zero_positions() const;
  std::vector<int> one_positions() const;

  ZeroOneString reversed() const;

  auto operator<=>(const ZeroOneString&) const = default;

 private:
  std::string word_;
};

/// Row i is the number of ones before the i-th zero; n - l rows.
Partition shape_of_string(const ZeroOneString& sigma);

/// Adds N boxes to every row. Throws std::invalid_argument when N < 0.
Partition shift_shape(const Partition& lambda, int N);

/// The question of whether [Y_sigma_1]...[Y_sigma_s][Y_mu][Y_nu] is nonzero on
/// Gr_l(n), together with the padding N used when turning it into a root game.
struct GrassmannProblem {
  std::vector<ZeroOneString> sigmas;
  ZeroOneString mu;
  ZeroOneString nu;
  int N = 0;

  int n() const { return mu.size(); }
  int l() const { return mu.ones(); }
  int s() const { return static_cast<int>(sigmas.size()); }

  /// Throws std::invalid_argument unless s >= 1, N >= 0 and all strings share n and l.
  void validate() const;

  /// Every class of the product in order: sigmas, mu, nu.
  std::vector<ZeroOneString> classes() const;

  /// Total codimension minus dim Gr_l(n); 0 for top-degree problems.
  int degree_excess() const;
};

nlohmann::json to_json(const GrassmannProblem& prob);
GrassmannProblem problem_from_json(const nlohmann::json& doc);

}  // namespace rootgame
