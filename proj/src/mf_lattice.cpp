#include "schurpos/mf_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace schurpos::mf {

Context Context::make(int n, int rows) {
  if (rows < 2 || rows > n - 1)
    throw std::invalid_argument("row count " + std::to_string(rows) + " outside 2.." +
                                std::to_string(n - 1) + " for " + std::to_string(n) + " cells");
  return {n, rows};
}

std::string RectLabel::to_string() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

bool is_valid(const RectLabel& label) {
  const int h = label.ctx.height();
  const int w = label.ctx.width();
  const auto [a, b, ctx] = label;
  if (a < 1 || a > h || b < 1 || b > w) return false;
  if (a < h && b < w) return true;
  if (a == h && b == w) return true;
  if (a == h) return b <= w / 2;
  return a <= h / 2;
}

RectLabel normalize(int a, int b, Context ctx) {
  const int h = ctx.height();
  const int w = ctx.width();
  if ((a == h && b == 0) || (a == 0 && b == w)) return {h, w, ctx};
  if (a == h && b != w) b = std::min(b, w - b);
  if (b == w && a != h) a = std::min(a, h - a);
  RectLabel out{a, b, ctx};
  if (!is_valid(out)) throw std::invalid_argument("label " + out.to_string() + " is not valid");
  return out;
}

int chain_rank(ChainKind kind, int x, int n, int rows) {
  const int top = kind == ChainKind::H ? rows - 1 : n - rows;
  if (x < 1 || x > top)
    throw std::out_of_range("chain element " + std::to_string(x) + " outside 1.." +
                            std::to_string(top));
  // Distance from the chain centre minus 1/4, scaled by 4.
  const int centre = kind == ChainKind::H ? 2 * rows - 1 : 2 * (n - rows) + 1;
  return -std::abs(4 * x - centre);
}

std::vector<int> chain(ChainKind kind, Context ctx) {
  const int top = kind == ChainKind::H ? ctx.height() : ctx.width();
  std::vector<int> out;
  for (int x = 1; x <= top; ++x) out.push_back(x);
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    return chain_rank(kind, x, ctx.n, ctx.rows) < chain_rank(kind, y, ctx.n, ctx.rows);
  });
  return out;
}

std::vector<RectLabel> elements(int n, int rows) {
  const Context ctx = Context::make(n, rows);
  std::vector<RectLabel> out;
  for (int a = 1; a <= ctx.height(); ++a)
    for (int b = 1; b <= ctx.width(); ++b)
      if (RectLabel label{a, b, ctx}; is_valid(label)) out.push_back(label);
  return out;
}

namespace {

Composition raw_ribbon(int a, int b, Context ctx) {
  return Composition(runs({{ctx.width() - b + 1, 1},
                           {1, a - 1},
                           {b + 1, 1},
                           {1, ctx.rows - a - 1}}));
}

int h_rank(int x, Context ctx) { return chain_rank(ChainKind::H, x, ctx.n, ctx.rows); }
int w_rank(int x, Context ctx) { return chain_rank(ChainKind::W, x, ctx.n, ctx.rows); }

void require_same_context(const RectLabel& x, const RectLabel& y) {
  if (x.ctx != y.ctx) throw std::invalid_argument("labels come from different posets");
}

}  // namespace

Composition ribbon_of_label(const RectLabel& label) {
  if (!is_valid(label))
    throw std::invalid_argument("label " + label.to_string() + " is not valid");
  return raw_ribbon(label.a, label.b, label.ctx);
}

RectLabel label_of_ribbon(const Composition& alpha) {
  if (alpha.empty() || !mf_pattern(alpha))
    throw std::invalid_argument("ribbon " + alpha.to_string() + " is not multiplicity-free");
  const Context ctx = Context::make(alpha.size(), static_cast<int>(alpha.length()));
  const Composition reversed = reverse(alpha);
  for (int a = 1; a <= ctx.height(); ++a) {
    for (int b = 1; b <= ctx.width(); ++b) {
      const Composition candidate = raw_ribbon(a, b, ctx);
      if (candidate == alpha || candidate == reversed) return normalize(a, b, ctx);
    }
  }
  throw std::logic_error("no rectangle label for " + alpha.to_string());
}

bool leq_s_closed(const RectLabel& lower, const RectLabel& upper) {
  require_same_context(lower, upper);
  const Context ctx = lower.ctx;
  return h_rank(lower.a, ctx) <= h_rank(upper.a, ctx) &&
         w_rank(lower.b, ctx) <= w_rank(upper.b, ctx);
}

std::vector<std::pair<RectLabel, RectLabel>> covers(int n, int rows) {
  const Context ctx = Context::make(n, rows);
  const int h = ctx.height();
  const int w = ctx.width();
  std::set<std::pair<RectLabel, RectLabel>> found;
  auto add = [&](int a1, int b1, int a2, int b2) {
    const RectLabel lo{a1, b1, ctx};
    const RectLabel hi{a2, b2, ctx};
    if (lo != hi && is_valid(lo) && is_valid(hi)) found.emplace(lo, hi);
  };

  const std::vector<int> hs = chain(ChainKind::H, ctx);
  const std::vector<int> ws = chain(ChainKind::W, ctx);
  for (int a = 1; a <= h / 2 - 1; ++a) add(a, w, a + 1, w);
  for (int b = 1; b < w; ++b)
    for (std::size_t i = 0; i + 1 < hs.size(); ++i) add(hs[i], b, hs[i + 1], b);
  for (int b = 1; b <= w / 2 - 1; ++b) add(h, b, h, b + 1);
  for (int a = 1; a < h; ++a)
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) add(a, ws[i], a, ws[i + 1]);
  add(h, w, 1, w);
  add(h, w, h, 1);
  return {found.begin(), found.end()};
}

RectLabel join(const RectLabel& x, const RectLabel& y) {
  require_same_context(x, y);
  const Context ctx = x.ctx;
  const int a = h_rank(x.a, ctx) >= h_rank(y.a, ctx) ? x.a : y.a;
  const int b = w_rank(x.b, ctx) >= w_rank(y.b, ctx) ? x.b : y.b;
  return normalize(a, b, ctx);
}

RectLabel meet(const RectLabel& x, const RectLabel& y) {
  require_same_context(x, y);
  const Context ctx = x.ctx;
  const int h = ctx.height();
  const int w = ctx.width();
  const int a = h_rank(x.a, ctx) <= h_rank(y.a, ctx) ? x.a : y.a;
  const int b = w_rank(x.b, ctx) <= w_rank(y.b, ctx) ? x.b : y.b;
  if (a == h && 2 * b > w) return normalize(a, w - b, ctx);
  if (b == w && 2 * a > h) return normalize(h - a, b, ctx);
  return normalize(a, b, ctx);
}

FinitePoset closed_form_poset(int n, int rows) {
  const std::vector<RectLabel> elems = elements(n, rows);
  return FinitePoset(elems.size(), [&](std::size_t i, std::size_t j) {
    return leq_s_closed(elems[i], elems[j]);
  });
}

namespace {

void require(bool ok, const std::string& condition) {
  if (!ok) throw std::invalid_argument("hypothesis violated: " + condition);
}

void require_shape_params(int m, int k, int n, int l) {
  require(m >= 1, "m >= 1");
  require(n >= 1, "n >= 1");
  require(k >= 0, "k >= 0");
  require(l >= 0, "l >= 0");
}

void require_fourcovers(int which, int m, int k, int n, int l) {
  require_shape_params(m, k, n, l);
  switch (which) {
    case 1: require(n - 1 > m, "n - 1 > m"); break;
    case 2:
      require(n > m, "n > m");
      require(l >= 1, "l >= 1");
      break;
    case 3:
      require(n >= 2, "n >= 2");
      require(l > k, "l > k");
      break;
    case 4:
      require(m >= 2, "m >= 2");
      require(n >= 2, "n >= 2");
      require(l - 1 > k, "l - 1 > k");
      break;
    default: throw std::invalid_argument("case must be 1..4");
  }
}

Composition shape(int first, int ones1, int second, int ones2) {
  return Composition(runs({{first, 1}, {1, ones1}, {second, 1}, {1, ones2}}));
}

}  // namespace

std::pair<Composition, Composition> fourcovers_sides(int which, int m, int k, int n, int l) {
  require_fourcovers(which, m, k, n, l);
  switch (which) {
    case 1: return {shape(n - 1, k, m + 1, l), shape(m, k, n, l)};
    case 2: return {shape(m, k, n, l), shape(n, k, m, l)};
    case 3: return {shape(m, k, n, l), shape(m, l, n, k)};
    default: return {shape(m, l - 1, n, k + 1), shape(m, k, n, l)};
  }
}

SchurVector fourcovers_delta(int which, int m, int k, int n, int l) {
  require_fourcovers(which, m, k, n, l);
  SchurVector out(m + k + n + l);
  switch (which) {
    case 1:
      for (int i = 0; i <= std::min(k, l); ++i)
        out.add(Partition(runs({{n - 1, 1}, {m + 1, 1}, {2, i}, {1, k + l - 2 * i}})), 1);
      break;
    case 2:
      for (int i = 0; i <= std::min(k, l - 1); ++i)
        out.add(Partition(runs({{n, 1}, {m + 1, 1}, {2, i}, {1, k + l - 2 * i - 1}})), 1);
      break;
    case 3:
      for (int i = 0; i <= std::min(n - 2, m - 1); ++i)
        out.add(Partition(runs({{n + m - i - 1, 1}, {i + 2, 1}, {2, k}, {1, l - k - 1}})), 1);
      break;
    default:
      for (int i = 0; i <= std::min(n - 2, m - 2); ++i)
        out.add(Partition(runs({{n + m - i - 2, 1}, {i + 2, 1}, {2, k + 1}, {1, l - k - 2}})), 1);
      break;
  }
  return out;
}

void OnlyCoversInstance::validate() const {
  require_shape_params(m, k, n, l);
  switch (which) {
    case 1:
    case 2:
      require(k2 >= 0 && l2 >= 0, "k', l' >= 0");
      require(k + l == k2 + l2, "k + l = k' + l'");
      if (which == 1) {
        require(n - 1 > m, "n - 1 > m");
      } else {
        require(n > m, "n > m");
        require(l >= 1, "l >= 1");
      }
      break;
    case 3:
    case 4:
      require(m2 >= 1, "m' >= 1");
      require(m + n == m2 + n2, "m + n = m' + n'");
      require(n >= 2, "n >= 2");
      require(n2 >= 2, "n' >= 2");
      if (which == 3) {
        require(l > k, "l > k");
      } else {
        require(m >= 2, "m >= 2");
        require(l - 1 > k, "l - 1 > k");
      }
      break;
    default: throw std::invalid_argument("case must be 1..4");
  }
}

Composition OnlyCoversInstance::lower() const {
  validate();
  switch (which) {
    case 1: return shape(n - 1, k, m + 1, l);
    case 2:
    case 3: return shape(m, k, n, l);
    default: return shape(m, l - 1, n, k + 1);
  }
}

Composition OnlyCoversInstance::upper() const {
  validate();
  switch (which) {
    case 1: return shape(m, k2, n, l2);
    case 2: return shape(n, k2, m, l2);
    case 3: return shape(m2, l, n2, k);
    default: return shape(m2, k, n2, l);
  }
}

std::string Evidence::to_string() const {
  switch (kind) {
    case Kind::RowDominance:
    case Kind::ColumnDominance:
      return std::string(kind == Kind::RowDominance ? "rows" : "cols") + " (" +
             upper_profile.to_string() + ") not dominated by (" + lower_profile.to_string() + ")";
    case Kind::Content:
      return "s(" + nu.to_string() + ") coefficient " + std::to_string(in_lower) + " vs " +
             std::to_string(in_upper);
  }
  return {};
}

Evidence onlycovers_witness(const OnlyCoversInstance& inst, ExpansionCache& cache) {
  inst.validate();
  const SkewDiagram lo = ribbon_of(inst.lower());
  const SkewDiagram hi = ribbon_of(inst.upper());
  const auto [m, k, n, l] = std::tuple{inst.m, inst.k, inst.n, inst.l};
  Evidence ev;
  switch (inst.which) {
    case 1:
      ev.kind = Evidence::Kind::RowDominance;
      ev.upper_profile = Partition(runs({{n, 1}, {m, 1}, {1, inst.k2 + inst.l2}}));
      ev.lower_profile = Partition(runs({{n - 1, 1}, {m + 1, 1}, {1, k + l}}));
      break;
    case 3: {
      // Columns of (m, 1^k, n, 1^l) with n >= 2 are {l+1, k+2, 1^(m+n-3)}.
      auto cols = [](int k_, int l_, int m_, int n_) {
        std::vector<int> parts = runs({{l_ + 1, 1}, {k_ + 2, 1}, {1, m_ + n_ - 3}});
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(parts);
      };
      ev.kind = Evidence::Kind::ColumnDominance;
      ev.upper_profile = cols(l, k, inst.m2, inst.n2);
      ev.lower_profile = cols(k, l, m, n);
      break;
    }
    case 2:
      ev.kind = Evidence::Kind::Content;
      ev.nu = Partition(runs({{n, 1}, {m + 1, 1}, {1, k + l - 1}}));
      break;
    default:
      // Conjugate of a case 2 witness for the transposed ribbons.
      ev.kind = Evidence::Kind::Content;
      ev.nu = conjugate(Partition(runs({{l + 1, 1}, {k + 3, 1}, {1, n + m - 4}})));
      break;
  }

  if (ev.kind == Evidence::Kind::Content) {
    ev.in_lower = cache.get(lo).coefficient(ev.nu);
    ev.in_upper = cache.get(hi).coefficient(ev.nu);
    ev.confirmed = ev.in_lower >= 1 && ev.in_upper == 0;
  } else {
    const Profile plo = profile(lo);
    const Profile phi = profile(hi);
    const bool rows = ev.kind == Evidence::Kind::RowDominance;
    ev.confirmed = (rows ? phi.rows : phi.cols) == ev.upper_profile &&
                   (rows ? plo.rows : plo.cols) == ev.lower_profile &&
                   !dominance_leq(ev.upper_profile, ev.lower_profile) &&
                   !necessary_filter(hi, lo);
  }
  return ev;
}

std::pair<Partition, Partition> schubert_pair(const RectLabel& label) {
  if (!is_valid(label))
    throw std::invalid_argument("label " + label.to_string() + " is not valid");
  const int w = label.ctx.width();
  return {Partition(runs({{label.a, label.b}})),
          Partition(runs({{w, label.ctx.rows - label.a - 1}, {w - label.b, label.a}}))};
}

TrimReport trim_report(int n, int rows) {
  const FinitePoset lattice = closed_form_poset(n, rows);
  TrimReport r;
  r.elements = lattice.size();
  r.is_lattice = lattice.is_lattice();
  r.join_irreducibles = join_irreducibles(lattice).size();
  r.meet_irreducibles = meet_irreducibles(lattice).size();
  r.longest_chain_elements = lattice.longest_chain();
  if (r.is_lattice) {
    const MaxChainModularity lm = left_modular_max_chains(lattice);
    r.left_modular_max_chain = lm.some_chain;
    r.left_modular_every_max_chain = lm.every_chain;
    r.spine_distributive = is_distributive_sublattice(lattice, lattice.spine());
  }
  return r;
}

}  // namespace schurpos::mf
