#include "schurpos/diagram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schurpos {

namespace {

std::vector<int> conjugate_parts(const std::vector<int>& parts) {
  std::vector<int> out(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return out;
}

// Deletes every index where outer and inner agree. Both inputs are padded
// to the same length; the results stay weakly decreasing.
void drop_empty_rows(std::vector<int>& outer, std::vector<int>& inner) {
  inner.resize(outer.size(), 0);
  std::vector<int> o;
  std::vector<int> i;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    if (outer[r] > inner[r]) {
      o.push_back(outer[r]);
      i.push_back(inner[r]);
    }
  }
  outer = std::move(o);
  inner = std::move(i);
}

}  // namespace

SkewDiagram::SkewDiagram(Partition outer, Partition inner) {
  if (inner.length() > outer.length())
    throw std::invalid_argument("inner shape is not contained in outer shape");
  for (std::size_t r = 0; r < inner.length(); ++r)
    if (inner[r] > outer[r])
      throw std::invalid_argument("inner shape is not contained in outer shape");

  std::vector<int> o = outer.parts();
  std::vector<int> i = inner.parts();
  drop_empty_rows(o, i);
  std::vector<int> ot = conjugate_parts(o);
  std::vector<int> it = conjugate_parts(i);
  drop_empty_rows(ot, it);
  while (!it.empty() && it.back() == 0) it.pop_back();
  outer_ = Partition(conjugate_parts(ot));
  inner_ = Partition::trimmed(conjugate_parts(it));
}

bool SkewDiagram::contains(int row, int col) const {
  if (row < 1 || row > num_rows()) return false;
  const auto r = static_cast<std::size_t>(row - 1);
  return col > inner_[r] && col <= outer_[r];
}

std::vector<Cell> SkewDiagram::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= num_rows(); ++r) {
    const auto idx = static_cast<std::size_t>(r - 1);
    for (int c = inner_[idx] + 1; c <= outer_[idx]; ++c) out.push_back({r, c});
  }
  return out;
}

std::string SkewDiagram::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

SkewDiagram ribbon_of(const Composition& alpha) {
  if (alpha.empty()) throw std::invalid_argument("ribbon of an empty composition");
  const std::size_t len = alpha.length();
  std::vector<int> outer(len);
  int tail = 0;
  for (std::size_t i = len; i-- > 0;) {
    tail += alpha[i];
    outer[i] = tail - static_cast<int>(len - 1 - i);
  }
  std::vector<int> inner;
  for (std::size_t i = 0; i + 1 < len; ++i) inner.push_back(outer[i + 1] - 1);
  return SkewDiagram(Partition(outer), Partition::trimmed(inner));
}

Composition composition_of(const SkewDiagram& a) {
  if (!is_ribbon(a)) throw std::invalid_argument("not a ribbon");
  std::vector<int> rows;
  for (std::size_t r = 0; r < static_cast<std::size_t>(a.num_rows()); ++r)
    rows.push_back(a.outer()[r] - a.inner()[r]);
  return Composition(std::move(rows));
}

Profile profile(const SkewDiagram& a) {
  std::vector<int> rows;
  for (std::size_t r = 0; r < static_cast<std::size_t>(a.num_rows()); ++r)
    rows.push_back(a.outer()[r] - a.inner()[r]);
  const Partition ot = conjugate(a.outer());
  const Partition it = conjugate(a.inner());
  std::vector<int> cols;
  for (std::size_t c = 0; c < ot.length(); ++c) cols.push_back(ot[c] - it[c]);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  std::sort(cols.begin(), cols.end(), std::greater<>());
  return {Partition::trimmed(rows), Partition::trimmed(cols)};
}

SkewDiagram rotate180(const SkewDiagram& a) {
  const int rows = a.num_rows();
  const int width = a.num_cols();
  std::vector<int> outer(static_cast<std::size_t>(rows));
  std::vector<int> inner(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    const auto src = static_cast<std::size_t>(rows - 1 - i);
    outer[static_cast<std::size_t>(i)] = width - a.inner()[src];
    inner[static_cast<std::size_t>(i)] = width - a.outer()[src];
  }
  return SkewDiagram(Partition(outer), Partition::trimmed(inner));
}

SkewDiagram transpose(const SkewDiagram& a) {
  return SkewDiagram(conjugate(a.outer()), conjugate(a.inner()));
}

bool is_connected(const SkewDiagram& a) {
  // In basic form every row is non-empty, so consecutive rows must share a
  // column: row r starts at inner[r] + 1, row r + 1 ends at outer[r + 1].
  for (std::size_t r = 0; r + 1 < static_cast<std::size_t>(a.num_rows()); ++r)
    if (a.inner()[r] >= a.outer()[r + 1]) return false;
  return true;
}

bool is_ribbon(const SkewDiagram& a) {
  return a.size() > 0 && is_connected(a) && rectangle_count(a, 2, 2) == 0;
}

long rectangle_count(const SkewDiagram& a, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rectangle dimensions must be positive");
  long count = 0;
  for (int top = 1; top + m - 1 <= a.num_rows(); ++top) {
    for (int left = 1; left + n - 1 <= a.num_cols(); ++left) {
      bool inside = true;
      for (int r = top; r < top + m && inside; ++r) {
        const auto idx = static_cast<std::size_t>(r - 1);
        inside = a.inner()[idx] < left && left + n - 1 <= a.outer()[idx];
      }
      if (inside) ++count;
    }
  }
  return count;
}

Composition compose(const MfPattern& p) {
  std::vector<int> parts;
  if (p.m > 0) parts.push_back(p.m);
  parts.insert(parts.end(), static_cast<std::size_t>(p.k), 1);
  parts.push_back(p.n);
  parts.insert(parts.end(), static_cast<std::size_t>(p.l), 1);
  Composition alpha(std::move(parts));
  return p.reversed ? reverse(alpha) : alpha;
}

namespace {

std::optional<MfPattern> match_unreversed(const std::vector<int>& c) {
  if (c.size() == 1) return MfPattern{0, 0, c[0], 0, false};
  // After the leading part at most one part may exceed 1.
  std::size_t big = 0;
  int big_count = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] > 1) {
      big = i;
      ++big_count;
    }
  }
  if (big_count > 1) return std::nullopt;
  if (big_count == 0) big = 1;
  MfPattern p;
  p.m = c[0];
  p.k = static_cast<int>(big) - 1;
  p.n = c[big];
  p.l = static_cast<int>(c.size() - big - 1);
  return p;
}

}  // namespace

std::optional<MfPattern> mf_pattern(const Composition& alpha) {
  if (alpha.empty()) throw std::invalid_argument("mf_pattern of an empty composition");
  if (auto p = match_unreversed(alpha.parts())) return p;
  if (auto p = match_unreversed(reverse(alpha).parts())) {
    p->reversed = true;
    return p;
  }
  return std::nullopt;
}

std::vector<SkewDiagram> enumerate_basic_skew(int n, int limit) {
  if (n < 1 || n > limit)
    throw std::out_of_range("diagram size " + std::to_string(n) + " outside 1.." +
                            std::to_string(limit));
  // Choose row lengths top to bottom, then place rows bottom-up. The bottom
  // row starts in column 1; each row above may shift right as long as it
  // stays a skew shape and leaves no empty column between it and the row
  // below.
  std::vector<SkewDiagram> out;
  for (const Composition& rows : compositions_of(n)) {
    const std::size_t len = rows.length();
    std::vector<int> inner(len, 0);
    std::vector<int> outer(len, 0);
    std::function<void(std::size_t)> place = [&](std::size_t r) {
      // r rows from the bottom have been placed; next is row len-1-r.
      if (r == len) {
        out.emplace_back(Partition(outer), Partition::trimmed(inner));
        return;
      }
      const std::size_t row = len - 1 - r;
      const int width = rows[row];
      if (r == 0) {
        inner[row] = 0;
        outer[row] = width;
        place(r + 1);
        return;
      }
      const int below_inner = inner[row + 1];
      const int below_outer = outer[row + 1];
      for (int start = std::max(below_inner, below_outer - width); start <= below_outer;
           ++start) {
        inner[row] = start;
        outer[row] = start + width;
        place(r + 1);
      }
    };
    place(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schurpos
