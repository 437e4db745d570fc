#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rootgame/grassmann_problem.hpp"
#include "rootgame/partition.hpp"

namespace rootgame {

/// A bijection from the boxes of a straight shape to the boxes of a skew
/// shape. domain is in row-major order; image[k] is the box domain[k] maps to.
///
/// Picture condition: whenever A is weakly above and weakly right of B,
/// f(A) precedes f(B) in row-major order; the same holds for f^{-1}.
struct Picture {
  std::vector<Box> domain;
  std::vector<Box> image;

  /// Image of a domain box; throws std::out_of_range when absent.
  Box operator()(Box b) const;
  bool operator==(const Picture&) const = default;
};

bool is_picture(const Partition& lambda, const SkewShape& skew, const Picture& f);

/// All pictures, sorted by image sequence. Empty when |lambda| != |skew|.
std::vector<Picture> enumerate_pictures(const Partition& lambda, const SkewShape& skew);
std::uint64_t count_pictures(const Partition& lambda, const SkewShape& skew);
std::optional<Picture> first_picture(const Partition& lambda, const SkewShape& skew);

/// A Littlewood-Richardson filling of nu/mu. rows[r] holds the entries of the
/// r-th row counted from the longest, left to right.
struct LRTableau {
  std::vector<std::vector<int>> rows;
};

/// Fillings of nu/mu with content lambda that are semistandard and whose
/// reverse reading word is a lattice word.
std::vector<LRTableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^nu_{lambda,mu}; 0 when sizes do not add up.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Sum of coefficient * s_lambda, optionally truncated to a rows x cols box.
class SchurExpansion {
 public:
  SchurExpansion() = default;
  explicit SchurExpansion(std::optional<std::pair<int, int>> box) : box_(box) {}

  static SchurExpansion single(const Partition& p, std::optional<std::pair<int, int>> box = std::nullopt);

  const std::map<Partition, std::uint64_t>& terms() const { return terms_; }
  std::uint64_t coefficient(const Partition& p) const;
  const std::optional<std::pair<int, int>>& box() const { return box_; }
  bool empty() const { return terms_.empty(); }

  /// Adds c * s_p unless p falls outside the box.
  void add(const Partition& p, std::uint64_t c);

  SchurExpansion times(const Partition& p) const;
  SchurExpansion times(const SchurExpansion& other) const;

  bool operator==(const SchurExpansion& other) const { return terms_ == other.terms_; }

 private:
  std::optional<std::pair<int, int>> box_;
  std::map<Partition, std::uint64_t> terms_;
};

SchurExpansion schur_product_expand(std::span<const Partition> parts,
                                    std::optional<std::pair<int, int>> box = std::nullopt);

/// Product of every class of the problem (sigmas, mu and nu) in the
/// (n-l) x l box. Empty exactly when the product vanishes.
SchurExpansion grassmann_product(const GrassmannProblem& prob);

/// Coefficient of lambda(nu^rev) in lambda(sigma_1)...lambda(sigma_s) lambda(mu),
/// computed in the (n-l) x l box; 0 unless the problem is of top degree.
std::uint64_t grassmann_intersection(const GrassmannProblem& prob);

}  // namespace rootgame
