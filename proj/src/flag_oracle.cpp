#include "rootgame/flag_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace rootgame {

namespace {

void trim(SparsePolynomial::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int exponent(const SparsePolynomial::Monomial& m, int r) {
  return r - 1 < static_cast<int>(m.size()) ? m[r - 1] : 0;
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(long long c) { return monomial({}, c); }

SparsePolynomial SparsePolynomial::monomial(Monomial exponents, long long c) {
  SparsePolynomial p;
  p.add(std::move(exponents), c);
  return p;
}

long long SparsePolynomial::coefficient(const Monomial& exponents) const {
  Monomial key = exponents;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

int SparsePolynomial::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, std::accumulate(m.begin(), m.end(), 0));
  return best;
}

void SparsePolynomial::add(Monomial exponents, long long c) {
  if (c == 0) return;
  trim(exponents);
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
  SparsePolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
  SparsePolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add(m, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
  SparsePolynomial out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      Monomial m(std::max(a.size(), b.size()), 0);
      for (std::size_t k = 0; k < a.size(); ++k) m[k] += a[k];
      for (std::size_t k = 0; k < b.size(); ++k) m[k] += b[k];
      out.add(std::move(m), ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::scaled(long long c) const {
  SparsePolynomial out;
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

SparsePolynomial SparsePolynomial::times_variable(int r) const {
  SparsePolynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial next = m;
    if (static_cast<int>(next.size()) < r) next.resize(r, 0);
    ++next[r - 1];
    out.add(std::move(next), c);
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    long long mag = c < 0 ? -c : c;
    std::string term = mono.empty() ? std::to_string(mag) : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

SparsePolynomial divided_difference(const SparsePolynomial& f, int i) {
  SparsePolynomial out;
  for (const auto& [m, c] : f.terms()) {
    const int p = exponent(m, i), q = exponent(m, i + 1);
    if (p == q) continue;
    SparsePolynomial::Monomial base = m;
    if (static_cast<int>(base.size()) < i + 1) base.resize(i + 1, 0);
    const int hi = std::max(p, q), lo = std::min(p, q);
    const long long sign = p > q ? 1 : -1;
    // (x_i^hi x_{i+1}^lo - x_i^lo x_{i+1}^hi) / (x_i - x_{i+1}) = sum x_i^{hi-1-k} x_{i+1}^{lo+k}
    for (int k = 0; k < hi - lo; ++k) {
      base[i - 1] = hi - 1 - k;
      base[i] = lo + k;
      out.add(base, sign * c);
    }
  }
  return out;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, Permutation>, SparsePolynomial> dd_cache;
std::map<Permutation, SparsePolynomial> transition_cache;

template <typename Map, typename Key>
const typename Map::mapped_type* cache_find(const Map& map, const Key& key) {
  std::lock_guard lock(cache_mutex);
  auto it = map.find(key);
  return it == map.end() ? nullptr : &it->second;
}

template <typename Map, typename Key>
const typename Map::mapped_type& cache_store(Map& map, const Key& key, typename Map::mapped_type value) {
  std::lock_guard lock(cache_mutex);
  return map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

SparsePolynomial schubert_polynomial(const Permutation& pi, int ambient) {
  if (pi.size() > ambient) throw std::invalid_argument("permutation larger than the ambient S_n");
  const Permutation w = pi.extended(ambient);
  if (auto hit = cache_find(dd_cache, std::make_pair(ambient, w))) return *hit;

  SparsePolynomial result;
  int ascent = 0;
  for (int i = 1; i < ambient && !ascent; ++i)
    if (w(i) < w(i + 1)) ascent = i;
  if (!ascent) {
    SparsePolynomial::Monomial staircase;
    for (int i = 1; i < ambient; ++i) staircase.push_back(ambient - i);
    result = SparsePolynomial::monomial(staircase);
  } else {
    result = divided_difference(schubert_polynomial(w.swap_positions(ascent, ascent + 1), ambient), ascent);
  }
  return cache_store(dd_cache, std::make_pair(ambient, w), std::move(result));
}

SparsePolynomial schubert_polynomial_transition(const Permutation& pi) {
  const Permutation w = pi.trimmed();
  if (w.size() <= 1) return SparsePolynomial::constant(1);
  if (auto hit = cache_find(transition_cache, w)) return *hit;

  const int n = w.size();
  int r = 0;
  for (int i = n - 1; i >= 1 && !r; --i)
    if (w(i) > w(i + 1)) r = i;
  int s = 0;
  for (int j = n; j > r && !s; --j)
    if (w(j) < w(r)) s = j;
  const Permutation v = w.swap_positions(r, s);
  SparsePolynomial result = schubert_polynomial_transition(v).times_variable(r);
  const int target = v.length() + 1;
  for (int q = 1; q < r; ++q) {
    const Permutation u = v.swap_positions(q, r);
    if (u.length() == target) result = result + schubert_polynomial_transition(u);
  }
  return cache_store(transition_cache, w, std::move(result));
}

SchubertBasisExpansion expand_in_schubert_basis(const SparsePolynomial& p) {
  SchubertBasisExpansion out;
  SparsePolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [code, c] = *rest.terms().begin();
    const Permutation w = Permutation::from_code(code).trimmed();
    const long long coeff = c;
    out[w] += coeff;
    rest = rest - schubert_polynomial_transition(w).scaled(coeff);
  }
  return out;
}

long long schubert_coefficient(const SparsePolynomial& p, const Permutation& target) {
  SparsePolynomial::Monomial goal = target.code();
  trim(goal);
  SparsePolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [code, c] = *rest.terms().begin();
    if (code == goal) return c;
    if (goal < code) return 0;
    const long long coeff = c;
    rest = rest - schubert_polynomial_transition(Permutation::from_code(code)).scaled(coeff);
  }
  return 0;
}

bool in_schubert_cone(const SchubertBasisExpansion& e) {
  return std::all_of(e.begin(), e.end(), [](const auto& kv) { return kv.second >= 0; });
}

namespace {

void check_sizes(std::span<const Permutation> perms, int n) {
  if (perms.empty()) throw std::invalid_argument("at least one permutation is required");
  for (const Permutation& p : perms)
    if (p.size() != n) throw std::invalid_argument("permutation " + p.to_string() + " is not in S_" + std::to_string(n));
}

bool top_degree(std::span<const Permutation> perms, int n) {
  int total = 0;
  for (const Permutation& p : perms) total += p.length();
  return total == n * (n - 1) / 2;
}

}  // namespace

std::uint64_t flag_intersection(std::span<const Permutation> perms, int n) {
  check_sizes(perms, n);
  if (!top_degree(perms, n)) return 0;
  SparsePolynomial product = SparsePolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < perms.size(); ++k) product = product * schubert_polynomial(perms[k], n);
  const long long c = schubert_coefficient(product, perms.back().times_longest_left());
  if (c < 0) throw OracleError("negative Schubert structure constant; oracle is inconsistent");
  return static_cast<std::uint64_t>(c);
}

namespace {

using ClassVector = std::map<Permutation, long long>;

// x_r * S_w in H*(Fl(n)).
void monk_step(const Permutation& w, int r, long long c, ClassVector& out) {
  const int n = w.size();
  for (int b = r + 1; b <= n; ++b) {
    if (w(b) < w(r)) continue;
    bool cover = true;
    for (int k = r + 1; k < b && cover; ++k) cover = !(w(r) < w(k) && w(k) < w(b));
    if (cover) out[w.swap_positions(r, b)] += c;
  }
  for (int a = 1; a < r; ++a) {
    if (w(a) > w(r)) continue;
    bool cover = true;
    for (int k = a + 1; k < r && cover; ++k) cover = !(w(a) < w(k) && w(k) < w(r));
    if (cover) out[w.swap_positions(a, r)] -= c;
  }
}

ClassVector times_monomial(const ClassVector& v, const SparsePolynomial::Monomial& m) {
  ClassVector current = v;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (int e = 0; e < m[r]; ++e) {
      ClassVector next;
      for (const auto& [w, c] : current)
        if (c != 0) monk_step(w, static_cast<int>(r) + 1, c, next);
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      current = std::move(next);
    }
  }
  return current;
}

}  // namespace

std::map<Permutation, long long> monk_product(std::span<const Permutation> perms, int n) {
  check_sizes(perms, n);
  ClassVector acc{{perms.front(), 1}};
  for (std::size_t k = 1; k < perms.size(); ++k) {
    ClassVector next;
    const SparsePolynomial factor = schubert_polynomial(perms[k], n);
    for (const auto& [mono, c] : factor.terms()) {
      for (const auto& [w, v] : times_monomial(acc, mono)) next[w] += c * v;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  return acc;
}

std::uint64_t flag_intersection_monk(std::span<const Permutation> perms, int n) {
  check_sizes(perms, n);
  if (!top_degree(perms, n)) return 0;
  const auto product = monk_product(perms, n);
  auto it = product.find(Permutation::longest(n));
  const long long c = it == product.end() ? 0 : it->second;
  if (c < 0) throw OracleError("negative coefficient of the point class in the Monk product");
  return static_cast<std::uint64_t>(c);
}

}  // namespace rootgame
