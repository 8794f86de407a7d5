#pragma once

#include <compare>
#include <string>
#include <vector>

namespace xclin {

// Permutation of {0..degree-1} stored as an image table.
// Products compose left-to-right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);                // identity
  explicit Permutation(std::vector<int> images);   // validated bijection

  // Parses disjoint cycles on 1-based points, e.g. "(1,2,3)(4,5)".
  // "()" denotes the identity. Rejects out-of-range or repeated points.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }

  Permutation operator*(const Permutation& other) const;  // this, then other
  Permutation inverse() const;

  bool is_identity() const;
  int order() const;

  std::string cycle_string() const;  // "()" for the identity

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

}  // namespace xclin
