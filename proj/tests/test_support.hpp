#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootgame/permutation.hpp"

namespace testing_support {

inline nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(std::string(ROOTGAME_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  return nlohmann::json::parse(in);
}

inline rootgame::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return rootgame::Permutation(std::move(images));
}

inline std::vector<rootgame::Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<rootgame::Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace testing_support
