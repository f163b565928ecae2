#include "schurpos/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurpos {

void SchurVector::add(const Partition& index, Coefficient coefficient) {
  if (index.size() != degree_)
    throw std::invalid_argument("index " + index.to_string() + " has the wrong degree");
  if (coefficient == 0) return;
  auto it = terms_.find(index);
  const Coefficient updated = (it == terms_.end() ? 0 : it->second) + coefficient;
  if (updated < 0) throw std::invalid_argument("negative Schur coefficient");
  if (updated == 0) {
    terms_.erase(index);
  } else if (it == terms_.end()) {
    terms_.emplace(index, updated);
  } else {
    it->second = updated;
  }
}

Coefficient SchurVector::coefficient(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

Coefficient SchurVector::total() const {
  Coefficient sum = 0;
  for (const auto& [index, c] : terms_) sum += c;
  return sum;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    out += "s(" + index.to_string() + ")";
  }
  return out;
}

bool is_semistandard(const Ssyt& t) {
  const std::vector<Cell> cells = t.shape.cells();
  if (cells.size() != t.entries.size()) return false;
  std::map<Cell, int> at;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (t.entries[i] < 1) return false;
    at[cells[i]] = t.entries[i];
  }
  for (const auto& [cell, value] : at) {
    if (auto right = at.find({cell.row, cell.col + 1}); right != at.end() && right->second < value)
      return false;
    if (auto below = at.find({cell.row + 1, cell.col}); below != at.end() && below->second <= value)
      return false;
  }
  return true;
}

std::vector<int> reading_word(const Ssyt& t) {
  const std::vector<Cell> cells = t.shape.cells();
  std::vector<int> word;
  word.reserve(cells.size());
  std::size_t row_begin = 0;
  while (row_begin < cells.size()) {
    std::size_t row_end = row_begin;
    while (row_end < cells.size() && cells[row_end].row == cells[row_begin].row) ++row_end;
    for (std::size_t i = row_end; i-- > row_begin;) word.push_back(t.entries[i]);
    row_begin = row_end;
  }
  return word;
}

bool is_lattice_word(std::span<const int> word) {
  std::vector<int> counts;
  for (int letter : word) {
    if (letter < 1) return false;
    if (static_cast<std::size_t>(letter) >= counts.size())
      counts.resize(static_cast<std::size_t>(letter) + 1, 0);
    ++counts[static_cast<std::size_t>(letter)];
    if (letter > 1 && counts[static_cast<std::size_t>(letter)] >
                          counts[static_cast<std::size_t>(letter - 1)])
      return false;
  }
  return true;
}

namespace {

// Depth-first filling in reading order. A cell's right neighbour and the
// cell above it are always filled earlier, so row weakness, column
// strictness and the lattice condition can all be checked on placement.
class LrFiller {
 public:
  explicit LrFiller(const SkewDiagram& shape) : max_letter_(shape.num_rows()) {
    std::map<Cell, int> index;
    for (int r = 1; r <= shape.num_rows(); ++r) {
      const auto row = static_cast<std::size_t>(r - 1);
      for (int c = shape.outer()[row]; c > shape.inner()[row]; --c) {
        index[{r, c}] = static_cast<int>(cells_.size());
        cells_.push_back({r, c});
      }
    }
    for (const Cell& cell : cells_) {
      auto right = index.find({cell.row, cell.col + 1});
      auto above = index.find({cell.row - 1, cell.col});
      right_.push_back(right == index.end() ? -1 : right->second);
      above_.push_back(above == index.end() ? -1 : above->second);
    }
    word_.assign(cells_.size(), 0);
    counts_.assign(static_cast<std::size_t>(max_letter_) + 2, 0);
  }

  std::uint64_t run(const std::function<void(std::span<const int>)>& visit) {
    visit_ = &visit;
    found_ = 0;
    fill(0);
    return found_;
  }

 private:
  void fill(std::size_t pos) {
    if (pos == cells_.size()) {
      ++found_;
      (*visit_)(word_);
      return;
    }
    int low = 1;
    int high = max_letter_;
    if (above_[pos] >= 0) low = word_[static_cast<std::size_t>(above_[pos])] + 1;
    if (right_[pos] >= 0) high = std::min(high, word_[static_cast<std::size_t>(right_[pos])]);
    for (int v = low; v <= high; ++v) {
      const auto slot = static_cast<std::size_t>(v);
      if (v > 1 && counts_[slot] + 1 > counts_[slot - 1]) continue;
      ++counts_[slot];
      word_[pos] = v;
      fill(pos + 1);
      --counts_[slot];
    }
  }

  int max_letter_;
  std::vector<Cell> cells_;
  std::vector<int> right_;
  std::vector<int> above_;
  std::vector<int> word_;
  std::vector<int> counts_;
  const std::function<void(std::span<const int>)>* visit_ = nullptr;
  std::uint64_t found_ = 0;
};

}  // namespace

std::uint64_t for_each_lr_filling(const SkewDiagram& shape,
                                  const std::function<void(std::span<const int>)>& visit) {
  LrFiller filler(shape);
  return filler.run(visit);
}

SchurVector expand(const SkewDiagram& shape, int max_size) {
  if (shape.size() > max_size)
    throw std::out_of_range("diagram has " + std::to_string(shape.size()) +
                            " cells, expansion limit is " + std::to_string(max_size));
  std::map<std::vector<int>, Coefficient> tally;
  const std::size_t letters = static_cast<std::size_t>(shape.num_rows());
  std::vector<int> content(letters);
  for_each_lr_filling(shape, [&](std::span<const int> word) {
    std::fill(content.begin(), content.end(), 0);
    for (int v : word) ++content[static_cast<std::size_t>(v - 1)];
    ++tally[content];
  });
  SchurVector out(shape.size());
  for (const auto& [c, n] : tally) out.add(Partition::trimmed(c), n);
  return out;
}

SchurVector omega_vec(const SchurVector& v) {
  SchurVector out(v.degree());
  for (const auto& [index, c] : v.terms()) out.add(conjugate(index), c);
  return out;
}

bool is_multiplicity_free_vec(const SchurVector& v) {
  return std::all_of(v.terms().begin(), v.terms().end(),
                     [](const auto& term) { return term.second <= 1; });
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    case Comparison::Less: return "less";
    case Comparison::Incomparable: return "incomparable";
  }
  return "incomparable";
}

ComparisonResult compare_vectors(const SchurVector& v1, const SchurVector& v2) {
  if (v1.terms() == v2.terms()) return {Comparison::Equal, std::nullopt};
  if (v1.degree() != v2.degree()) return {Comparison::Incomparable, std::nullopt};

  std::map<Partition, Coefficient, DescendingLex> diff;
  for (const auto& [index, c] : v1.terms()) diff[index] += c;
  for (const auto& [index, c] : v2.terms()) diff[index] -= c;
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& [index, c] : diff) {
    any_positive |= c > 0;
    any_negative |= c < 0;
  }
  if (any_positive && any_negative) return {Comparison::Incomparable, std::nullopt};

  const Coefficient sign = any_positive ? 1 : -1;
  SchurVector difference(v1.degree());
  for (const auto& [index, c] : diff) difference.add(index, sign * c);
  return {any_positive ? Comparison::Greater : Comparison::Less, std::move(difference)};
}

}  // namespace schurpos
