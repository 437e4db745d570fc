#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootgame/permutation.hpp"

namespace rootgame {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer polynomial in x_1, x_2, ... . Exponent vectors are stored without
/// trailing zeros, so std::map order is lexicographic order on monomials.
class SparsePolynomial {
 public:
  using Monomial = std::vector<int>;

  SparsePolynomial() = default;
  static SparsePolynomial constant(long long c);
  static SparsePolynomial monomial(Monomial exponents, long long c = 1);

  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Monomial& exponents) const;

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;

  void add(Monomial exponents, long long c);

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator-(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial scaled(long long c) const;
  SparsePolynomial times_variable(int r) const;

  /// "x1^2*x2 + 2*x3"; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const SparsePolynomial&) const = default;

 private:
  std::map<Monomial, long long> terms_;
};

/// (f - s_i f) / (x_i - x_{i+1}).
SparsePolynomial divided_difference(const SparsePolynomial& f, int i);

/// Schubert polynomial by divided differences from x_1^{n-1} x_2^{n-2} ... x_{n-1},
/// n = ambient. Throws std::invalid_argument when pi is larger than the ambient.
SparsePolynomial schubert_polynomial(const Permutation& pi, int ambient);

/// The same polynomial by the transition recursion S_w = x_r S_v + sum S_{v t_qr};
/// depends only on pi as an element of S_infinity.
SparsePolynomial schubert_polynomial_transition(const Permutation& pi);

/// Keys are trimmed permutations.
using SchubertBasisExpansion = std::map<Permutation, long long>;

/// Unique expansion of p in Schubert polynomials, by repeatedly subtracting
/// c * S_w where x^code(w) is the lexicographically least remaining monomial.
SchubertBasisExpansion expand_in_schubert_basis(const SparsePolynomial& p);

/// Coefficient of S_target in p; stops once every remaining monomial is
/// lexicographically past code(target).
long long schubert_coefficient(const SparsePolynomial& p, const Permutation& target);

/// True when every coefficient is nonnegative.
bool in_schubert_cone(const SchubertBasisExpansion& e);

/// Schubert intersection number on Fl(n): 0 unless total length is n(n-1)/2,
/// otherwise the coefficient of S_{w0 pi_m} in S_{pi_1} ... S_{pi_{m-1}}.
/// Throws OracleError if that coefficient is negative.
std::uint64_t flag_intersection(std::span<const Permutation> perms, int n);

/// Second oracle: multiplies classes in H*(Fl(n)) with Monk's rule and reads
/// off the coefficient of the point class.
std::uint64_t flag_intersection_monk(std::span<const Permutation> perms, int n);

/// Product of Schubert classes in H*(Fl(n)) via Monk's rule, keyed by
/// permutations of size n.
std::map<Permutation, long long> monk_product(std::span<const Permutation> perms, int n);

}  // namespace rootgame
