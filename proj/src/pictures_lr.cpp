#include "rootgame/pictures_lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rootgame {

Box Picture::operator()(Box b) const {
  for (std::size_t k = 0; k < domain.size(); ++k)
    if (domain[k] == b) return image[k];
  throw std::out_of_range("box outside the picture's domain");
}

namespace {

// A weakly above and weakly right of B, A != B.
bool above_right(Box a, Box b) { return a != b && a.row <= b.row && a.col >= b.col; }

bool compatible(Box a, Box fa, Box b, Box fb) {
  if (above_right(a, b) && !(fa < fb)) return false;
  if (above_right(b, a) && !(fb < fa)) return false;
  if (above_right(fa, fb) && !(a < b)) return false;
  if (above_right(fb, fa) && !(b < a)) return false;
  return true;
}

// Backtracking over row-major domain boxes; images tried in row-major order,
// so results come out sorted by image sequence.
template <typename OnPicture>
void search_pictures(const Partition& lambda, const SkewShape& skew, OnPicture&& on_picture) {
  if (!skew.valid() || lambda.size() != skew.size()) return;
  const std::vector<Box> domain = boxes_of(lambda);
  const std::vector<Box> targets = skew.boxes();
  std::vector<Box> image(domain.size());
  std::vector<bool> used(targets.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t at) -> bool {
    if (at == domain.size()) return on_picture(domain, image);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < at && ok; ++k) ok = compatible(domain[k], image[k], domain[at], targets[t]);
      if (!ok) continue;
      used[t] = true;
      image[at] = targets[t];
      const bool more = rec(at + 1);
      used[t] = false;
      if (!more) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

bool is_picture(const Partition& lambda, const SkewShape& skew, const Picture& f) {
  if (!skew.valid() || f.domain != boxes_of(lambda) || f.image.size() != f.domain.size()) return false;
  std::vector<Box> sorted = f.image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != skew.boxes()) return false;
  for (std::size_t a = 0; a < f.domain.size(); ++a)
    for (std::size_t b = a + 1; b < f.domain.size(); ++b)
      if (!compatible(f.domain[a], f.image[a], f.domain[b], f.image[b])) return false;
  return true;
}

std::vector<Picture> enumerate_pictures(const Partition& lambda, const SkewShape& skew) {
  std::vector<Picture> out;
  search_pictures(lambda, skew, [&](const std::vector<Box>& d, const std::vector<Box>& im) {
    out.push_back({d, im});
    return true;
  });
  return out;
}

std::uint64_t count_pictures(const Partition& lambda, const SkewShape& skew) {
  std::uint64_t count = 0;
  search_pictures(lambda, skew, [&](const std::vector<Box>&, const std::vector<Box>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Picture> first_picture(const Partition& lambda, const SkewShape& skew) {
  std::optional<Picture> out;
  search_pictures(lambda, skew, [&](const std::vector<Box>& d, const std::vector<Box>& im) {
    out = Picture{d, im};
    return false;
  });
  return out;
}

namespace {

// Fills nu/mu (conventional parts) in reverse reading order: rows from the
// top, right to left within a row.
template <typename OnTableau>
void search_tableaux(const std::vector<int>& content, const std::vector<int>& mu_parts,
                     const std::vector<int>& nu_parts, OnTableau&& on_tableau) {
  const int rows = static_cast<int>(nu_parts.size());
  auto mu_at = [&](int r) { return r < static_cast<int>(mu_parts.size()) ? mu_parts[r] : 0; };
  for (int r = 0; r < static_cast<int>(mu_parts.size()); ++r)
    if (r >= rows || mu_parts[r] > nu_parts[r]) return;

  std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
  for (int r = 0; r < rows; ++r)
    for (int c = nu_parts[r] - 1; c >= mu_at(r); --c) cells.emplace_back(r, c);

  std::vector<std::vector<int>> grid(rows);
  for (int r = 0; r < rows; ++r) grid[r].assign(nu_parts[r], 0);
  std::vector<int> used(content.size() + 1, 0);
  const int labels = static_cast<int>(content.size());

  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == cells.size()) {
      on_tableau(grid);
      return;
    }
    const auto [r, c] = cells[at];
    int hi = labels;
    if (c + 1 < nu_parts[r]) hi = std::min(hi, grid[r][c + 1]);  // rows weakly increase
    int lo = 1;
    if (r > 0 && c >= mu_at(r - 1)) lo = grid[r - 1][c] + 1;  // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= content[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      grid[r][c] = v;
      rec(at + 1);
      grid[r][c] = 0;
      --used[v];
    }
  };
  rec(0);
}

bool sizes_match(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lambda.size() + mu.size() == nu.size() && nu.contains(mu);
}

}  // namespace

std::vector<LRTableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::vector<LRTableau> out;
  if (!sizes_match(lambda, mu, nu)) return out;
  const auto mu_parts = mu.parts();
  search_tableaux(lambda.parts(), mu_parts, nu.parts(), [&](const std::vector<std::vector<int>>& grid) {
    LRTableau t;
    for (std::size_t r = 0; r < grid.size(); ++r) {
      const int skip = r < mu_parts.size() ? mu_parts[r] : 0;
      t.rows.emplace_back(grid[r].begin() + skip, grid[r].end());
    }
    out.push_back(std::move(t));
  });
  return out;
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!sizes_match(lambda, mu, nu)) return 0;
  std::uint64_t count = 0;
  search_tableaux(lambda.parts(), mu.parts(), nu.parts(), [&](const auto&) { ++count; });
  return count;
}

SchurExpansion SchurExpansion::single(const Partition& p, std::optional<std::pair<int, int>> box) {
  SchurExpansion e(box);
  e.add(p, 1);
  return e;
}

std::uint64_t SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& p, std::uint64_t c) {
  if (c == 0) return;
  if (box_ && !p.fits(box_->first, box_->second)) return;
  terms_[Partition::from_parts(p.parts())] += c;
}

namespace {

// Partitions nu containing `inner` with |nu| = |inner| + extra, optionally in a box.
std::vector<Partition> outer_shapes(const Partition& inner, int extra, std::optional<std::pair<int, int>> box) {
  const auto base = inner.parts();
  const int base_rows = static_cast<int>(base.size());
  const int limit = box ? std::min(box->first, base_rows + extra) : base_rows + extra;
  const int widest = box ? box->second : (base.empty() ? 0 : base.front()) + extra;
  std::vector<Partition> out;
  if (limit < base_rows) return out;
  std::vector<int> current;
  std::function<void(int, int, int)> rec = [&](int row, int left, int cap) {
    if (row == limit) {
      if (left == 0) out.push_back(Partition::from_parts(current));
      return;
    }
    const int floor = row < base_rows ? base[row] : 0;
    for (int v = floor; v <= std::min(cap, floor + left); ++v) {
      current.push_back(v);
      rec(row + 1, left - (v - floor), v);
      current.pop_back();
    }
  };
  rec(0, extra, widest);
  return out;
}

}  // namespace

SchurExpansion SchurExpansion::times(const Partition& p) const {
  SchurExpansion out(box_);
  for (const auto& [a, c] : terms_) {
    for (const Partition& nu : outer_shapes(a, p.size(), box_)) {
      const std::uint64_t k = lr_coefficient(p, a, nu);
      if (k) out.add(nu, c * k);
    }
  }
  return out;
}

SchurExpansion SchurExpansion::times(const SchurExpansion& other) const {
  SchurExpansion out(box_);
  for (const auto& [p, c] : other.terms()) {
    const SchurExpansion partial = times(p);
    for (const auto& [nu, k] : partial.terms()) out.add(nu, c * k);
  }
  return out;
}

SchurExpansion schur_product_expand(std::span<const Partition> parts, std::optional<std::pair<int, int>> box) {
  SchurExpansion acc = SchurExpansion::single(Partition{}, box);
  for (const Partition& p : parts) acc = acc.times(p);
  return acc;
}

SchurExpansion grassmann_product(const GrassmannProblem& prob) {
  prob.validate();
  std::vector<Partition> parts;
  for (const ZeroOneString& w : prob.classes()) parts.push_back(shape_of_string(w));
  return schur_product_expand(parts, std::make_pair(prob.n() - prob.l(), prob.l()));
}

std::uint64_t grassmann_intersection(const GrassmannProblem& prob) {
  prob.validate();
  if (prob.degree_excess() != 0) return 0;
  std::vector<Partition> parts;
  for (const ZeroOneString& s : prob.sigmas) parts.push_back(shape_of_string(s));
  parts.push_back(shape_of_string(prob.mu));
  const auto expansion = schur_product_expand(parts, std::make_pair(prob.n() - prob.l(), prob.l()));
  return expansion.coefficient(shape_of_string(prob.nu.reversed()));
}

}  // namespace rootgame
