#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xclin/group.hpp"

namespace xclin {

struct EnumerationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word letters: generator g forward = 2g, inverse = 2g+1.
inline int gen_letter(int g) { return 2 * g; }
inline int inv_gen_letter(int g) { return 2 * g + 1; }
inline int inverse_letter(int letter) { return letter ^ 1; }

// Finitely presented group: relators are freely reduced words over the
// generators and their inverses.
class Presentation {
 public:
  explicit Presentation(int generator_count) : generator_count_(generator_count) {
    if (generator_count < 0) throw std::invalid_argument("Presentation: negative arity");
  }

  int generator_count() const { return generator_count_; }
  void add_relator(const std::vector<int>& letters);  // freely reduces
  size_t relator_count() const { return offsets_.size() - 1; }
  // Letters of relator i.
  const int* relator_begin(size_t i) const { return letters_.data() + offsets_[i]; }
  const int* relator_end(size_t i) const { return letters_.data() + offsets_[i + 1]; }

 private:
  int generator_count_;
  std::vector<int> letters_;
  std::vector<size_t> offsets_ = {0};
};

// Complete coset table of the trivial subgroup: the regular representation
// of the presented group. Rows are live cosets renumbered consecutively in
// definition order.
struct CosetTable {
  int generator_count = 0;
  int coset_count = 0;
  std::vector<int> table;  // coset_count rows × 2·generator_count columns

  int entry(int coset, int letter) const {
    return table[static_cast<size_t>(coset) * 2 * generator_count + letter];
  }
  int trace(int coset, const int* begin, const int* end) const {
    for (const int* w = begin; w != end; ++w) coset = entry(coset, *w);
    return coset;
  }
  std::string to_tsv() const;
};

// HLT-style Todd-Coxeter over the trivial subgroup: full relator scanning
// with immediate coincidence processing, no lookahead. Throws
// EnumerationOverflow if more than `max_cosets` cosets get defined.
CosetTable coset_enumeration(const Presentation& p, int max_cosets = 1'000'000);

struct PermutationRealization {
  GroupPtr group;
  std::vector<int> generator_elements;  // presentation generator -> element index
};

PermutationRealization permutation_realization(const CosetTable& t);

// Cayley-table presentation: one generator per element, relators
// x_a x_b x_{ab}^{-1}. Enumerates back to |G| cosets.
Presentation presentation_from_group_table(const GroupPtr& g);

}  // namespace xclin
