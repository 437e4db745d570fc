#include "rootgame/grassmann_problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootgame {

ZeroOneString::ZeroOneString(std::string word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("01-string must be nonempty");
  for (char c : word_)
    if (c != '0' && c != '1') throw std::invalid_argument("01-string '" + word_ + "' has a character other than 0/1");
}

ZeroOneString ZeroOneString::identity(int zeros, int ones) {
  return ZeroOneString(std::string(zeros, '0') + std::string(ones, '1'));
}

ZeroOneString ZeroOneString::from_shape(const Partition& shape, int zeros, int ones) {
  const Partition full = shape.padded(zeros);
  if (full.row_count() != zeros || !shape.fits(zeros, ones)) {
    throw std::invalid_argument("shape " + shape.to_string() + " does not fit a " + std::to_string(zeros) + "x" +
                                std::to_string(ones) + " box");
  }
  std::string word;
  int placed = 0;
  for (int r = 1; r <= zeros; ++r) {
    word.append(full.row(r) - placed, '1');
    placed = full.row(r);
    word += '0';
  }
  word.append(ones - placed, '1');
  return ZeroOneString(std::move(word));
}

std::vector<ZeroOneString> ZeroOneString::all(int zeros, int ones) {
  std::string word = std::string(zeros, '0') + std::string(ones, '1');
  std::vector<ZeroOneString> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

int ZeroOneString::ones() const { return static_cast<int>(std::count(word_.begin(), word_.end(), '1')); }

std::vector<int> ZeroOneString::zero_positions() const {
  std::vector<int> out;
  for (int p = 1; p <= size(); ++p)
    if (!at(p)) out.push_back(p);
  return out;
}

std::vector<int> ZeroOneString::one_positions() const {
  std::vector<int> out;
  for (int p = 1; p <= size(); ++p)
    if (at(p)) out.push_back(p);
  return out;
}

ZeroOneString ZeroOneString::reversed() const { return ZeroOneString(std::string(word_.rbegin(), word_.rend())); }

Partition shape_of_string(const ZeroOneString& sigma) {
  std::vector<int> rows;
  int ones = 0;
  for (char c : sigma.str()) {
    if (c == '1') ++ones;
    else rows.push_back(ones);
  }
  return Partition(std::move(rows));
}

Partition shift_shape(const Partition& lambda, int N) { return lambda.shifted(N); }

void GrassmannProblem::validate() const {
  if (sigmas.empty()) throw std::invalid_argument("at least one sigma is required");
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  for (const ZeroOneString& w : classes()) {
    if (w.size() != n() || w.ones() != l()) {
      throw std::invalid_argument("string " + w.str() + " does not match n=" + std::to_string(n()) +
                                  ", l=" + std::to_string(l()));
    }
  }
}

std::vector<ZeroOneString> GrassmannProblem::classes() const {
  std::vector<ZeroOneString> out = sigmas;
  out.push_back(mu);
  out.push_back(nu);
  return out;
}

int GrassmannProblem::degree_excess() const {
  int total = 0;
  for (const ZeroOneString& w : classes()) total += shape_of_string(w).size();
  return total - l() * (n() - l());
}

nlohmann::json to_json(const GrassmannProblem& prob) {
  nlohmann::json sigmas = nlohmann::json::array();
  for (const auto& s : prob.sigmas) sigmas.push_back(s.str());
  return {{"sigmas", sigmas}, {"mu", prob.mu.str()}, {"nu", prob.nu.str()}, {"N", prob.N}};
}

GrassmannProblem problem_from_json(const nlohmann::json& doc) {
  GrassmannProblem prob;
  for (const auto& s : doc.at("sigmas")) prob.sigmas.emplace_back(s.get<std::string>());
  prob.mu = ZeroOneString(doc.at("mu").get<std::string>());
  prob.nu = ZeroOneString(doc.at("nu").get<std::string>());
  prob.N = doc.contains("N") ? doc.at("N").get<int>() : prob.l();
  prob.validate();
  return prob;
}

}  // namespace rootgame
