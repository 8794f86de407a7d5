#include "xclin/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xclin {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("Permutation: empty image table");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw std::invalid_argument("Permutation: empty cycle text");
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("Permutation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw std::invalid_argument("Permutation: malformed cycle in \"" + text + "\"");
      int point = std::stoi(text.substr(start, i - start));
      if (point < 1 || point > degree)
        throw std::invalid_argument("Permutation: point out of range in \"" + text + "\"");
      if (used[point - 1])
        throw std::invalid_argument("Permutation: repeated point in \"" + text + "\"");
      used[point - 1] = 1;
      cycle.push_back(point - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("Permutation: unclosed cycle in \"" + text + "\"");
    ++i;  // ')'
    if (cycle.size() == 1)
      throw std::invalid_argument("Permutation: fixed point listed as cycle in \"" + text + "\"");
    for (size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Permutation: degree mismatch in product");
  std::vector<int> out(images_.size());
  for (int x = 0; x < degree(); ++x) out[x] = other.images_[images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int x = 0; x < degree(); ++x) out[images_[x]] = x;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

int Permutation::order() const {
  int n = 1;
  Permutation p = *this;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

std::string Permutation::cycle_string() const {
  std::vector<char> done(images_.size(), 0);
  std::string out;
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x + 1);
      done[x] = 1;
      x = images_[x];
      first = false;
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace xclin
