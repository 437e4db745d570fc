#include "rootgame/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rootgame {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      if (token.empty() ||
          !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("malformed permutation entry '" + token + "'");
      }
      images.push_back(std::stoi(token));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      images.push_back(c - '0');
    }
    if (images.size() >= 10) {
      throw std::invalid_argument("permutations with n >= 10 must be comma-separated");
    }
  }
  if (images.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(images));
}

Permutation Permutation::from_code(std::span<const int> code) {
  int n = static_cast<int>(code.size());
  for (int i = 0; i < static_cast<int>(code.size()); ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative Lehmer code entry");
    n = std::max(n, i + 1 + code[i]);
  }
  std::vector<int> available(n);
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
    images.push_back(available[c]);
    available.erase(available.begin() + c);
  }
  return Permutation(std::move(images));
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[j] < images_[i]) ++c[i];
  return c;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::times_longest_left() const {
  std::vector<int> images(images_);
  for (int& v : images) v = size() + 1 - v;
  return Permutation(std::move(images));
}

Permutation Permutation::swap_positions(int a, int b) const {
  std::vector<int> images(images_);
  std::swap(images.at(a - 1), images.at(b - 1));
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::trimmed() const {
  Permutation out = *this;
  while (!out.images_.empty() && out.images_.back() == out.size()) out.images_.pop_back();
  return out;
}

Permutation Permutation::extended(int n) const {
  if (n < size()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation out = *this;
  for (int v = size() + 1; v <= n; ++v) out.images_.push_back(v);
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool commas = size() >= 10;
  for (int i = 0; i < size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string Permutation::to_display() const {
  std::string out;
  for (int v : images_) out += v < 10 ? std::to_string(v) : "(" + std::to_string(v) + ")";
  return out;
}

}  // namespace rootgame
