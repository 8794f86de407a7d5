#include "xclin/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace xclin {

void Presentation::add_relator(const std::vector<int>& letters) {
  std::vector<int> reduced;
  reduced.reserve(letters.size());
  for (int l : letters) {
    if (l < 0 || l >= 2 * generator_count_)
      throw std::invalid_argument("Presentation: letter out of range");
    if (!reduced.empty() && reduced.back() == inverse_letter(l))
      reduced.pop_back();
    else
      reduced.push_back(l);
  }
  letters_.insert(letters_.end(), reduced.begin(), reduced.end());
  offsets_.push_back(letters_.size());
}

namespace {

// Working state for one enumeration. Rows of dead cosets are freed promptly
// so memory tracks the live set, not everything ever defined.
class Enumerator {
 public:
  Enumerator(const Presentation& p, int max_cosets)
      : pres_(p), cols_(2 * p.generator_count()), max_cosets_(max_cosets) {
    if (max_cosets < 1) throw std::invalid_argument("coset_enumeration: max_cosets < 1");
    define_root();
  }

  CosetTable run() {
    for (size_t c = 0; c < rows_.size(); ++c) {
      if (!alive(static_cast<int>(c))) continue;
      for (size_t r = 0; r < pres_.relator_count(); ++r) {
        scan_and_fill(static_cast<int>(c), pres_.relator_begin(r), pres_.relator_end(r));
        if (!alive(static_cast<int>(c))) break;
      }
      if (!alive(static_cast<int>(c))) continue;
      for (int x = 0; x < cols_; ++x)
        if (rows_[c][x] < 0) define(static_cast<int>(c), x);
    }
    return compact();
  }

 private:
  const Presentation& pres_;
  const int cols_;
  const int max_cosets_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> parent_;       // union-find; parent_[c] == c iff live
  std::vector<int> merge_queue_;  // dead cosets pending row transfer
  size_t queue_head_ = 0;
  int defined_ = 0;

  bool alive(int c) const { return parent_[c] == c; }

  int rep(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  void define_root() {
    rows_.emplace_back(cols_, -1);
    parent_.push_back(0);
    defined_ = 1;
  }

  int define(int from, int letter) {
    if (defined_ >= max_cosets_)
      throw EnumerationOverflow("coset enumeration exceeded " +
                                std::to_string(max_cosets_) + " cosets");
    int n = static_cast<int>(rows_.size());
    rows_.emplace_back(cols_, -1);
    parent_.push_back(n);
    ++defined_;
    rows_[from][letter] = n;
    rows_[n][inverse_letter(letter)] = from;
    return n;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller representative
    parent_[b] = a;
    merge_queue_.push_back(b);
  }

  void process_coincidences() {
    while (queue_head_ < merge_queue_.size()) {
      int dead = merge_queue_[queue_head_++];
      std::vector<int> row = std::move(rows_[dead]);
      rows_[dead].clear();
      rows_[dead].shrink_to_fit();
      for (int x = 0; x < cols_; ++x) {
        int target = row[x];
        if (target < 0) continue;
        // drop the mirror entry pointing back at the dead coset
        if (!rows_[target].empty() && rows_[target][inverse_letter(x)] == dead)
          rows_[target][inverse_letter(x)] = -1;
        int mu = rep(dead);
        int nu = rep(target);
        if (rows_[mu][x] >= 0)
          merge(nu, rows_[mu][x]);
        else if (rows_[nu][inverse_letter(x)] >= 0)
          merge(mu, rows_[nu][inverse_letter(x)]);
        else {
          rows_[mu][x] = nu;
          rows_[nu][inverse_letter(x)] = mu;
        }
      }
    }
    merge_queue_.clear();
    queue_head_ = 0;
  }

  void scan_and_fill(int start, const int* begin, const int* end) {
    if (begin == end) return;
    int f = start;
    const int* i = begin;
    int b = start;
    const int* j = end - 1;
    while (true) {
      while (i <= j && rows_[f][*i] >= 0) f = rows_[f][*i++];
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (j >= i && rows_[b][inverse_letter(*j)] >= 0) b = rows_[b][inverse_letter(*j--)];
      if (j < i) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i) {  // deduction closing the cycle
        rows_[f][*i] = b;
        rows_[b][inverse_letter(*i)] = f;
        return;
      }
      f = define(f, *i++);
    }
  }

  CosetTable compact() {
    std::vector<int> new_index(rows_.size(), -1);
    int live = 0;
    for (size_t c = 0; c < rows_.size(); ++c)
      if (alive(static_cast<int>(c))) new_index[c] = live++;
    CosetTable out;
    out.generator_count = pres_.generator_count();
    out.coset_count = live;
    out.table.assign(static_cast<size_t>(live) * cols_, -1);
    for (size_t c = 0; c < rows_.size(); ++c) {
      if (new_index[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) {
        int t = rows_[c][x];
        if (t < 0) throw std::logic_error("coset table incomplete after enumeration");
        out.table[static_cast<size_t>(new_index[c]) * cols_ + x] = new_index[rep(t)];
      }
    }
    return out;
  }
};

}  // namespace

CosetTable coset_enumeration(const Presentation& p, int max_cosets) {
  if (p.generator_count() == 0) {
    CosetTable t;
    t.generator_count = 0;
    t.coset_count = 1;
    return t;
  }
  Enumerator e(p, max_cosets);
  return e.run();
}

std::string CosetTable::to_tsv() const {
  std::ostringstream out;
  out << "coset";
  for (int g = 0; g < generator_count; ++g) out << "\tg" << g << "\tg" << g << "^-1";
  out << "\n";
  for (int c = 0; c < coset_count; ++c) {
    out << c;
    for (int x = 0; x < 2 * generator_count; ++x) out << "\t" << entry(c, x);
    out << "\n";
  }
  return out.str();
}

PermutationRealization permutation_realization(const CosetTable& t) {
  if (t.coset_count < 1) throw std::invalid_argument("permutation_realization: empty table");
  std::vector<Permutation> gens;
  gens.reserve(t.generator_count);
  for (int g = 0; g < t.generator_count; ++g) {
    std::vector<int> images(t.coset_count);
    for (int c = 0; c < t.coset_count; ++c) images[c] = t.entry(c, gen_letter(g));
    gens.emplace_back(std::move(images));
  }
  GroupPtr grp = Group::from_generators(std::max(1, t.coset_count), gens);
  if (grp->order() != t.coset_count)
    throw std::logic_error("permutation_realization: image is not regular");
  std::vector<int> gen_elements(t.generator_count);
  for (int g = 0; g < t.generator_count; ++g) gen_elements[g] = grp->index_of(gens[g]);
  return PermutationRealization{grp, std::move(gen_elements)};
}

Presentation presentation_from_group_table(const GroupPtr& g) {
  const int n = g->order();
  Presentation p(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p.add_relator({gen_letter(a), gen_letter(b), inv_gen_letter(g->mul(a, b))});
  return p;
}

}  // namespace xclin
