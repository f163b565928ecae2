#include "schurpos/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurpos/lr.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/verify.hpp"

namespace schurpos::cli {

using Json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat(std::string_view word) {
    skip_space();
    const std::size_t start = pos_;
    for (char c : word) {
      if (!eat(c)) {
        pos_ = start;
        return false;
      }
    }
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }

  std::vector<int> numbers() {
    std::vector<int> out{number()};
    while (eat(',')) out.push_back(number());
    return out;
  }

  void finish() {
    if (!at_end()) fail("unexpected character");
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    throw ParseError(what, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string label_text(const mf::RectLabel& label) {
  return label.to_string() + "@" + std::to_string(label.ctx.n) + "," +
         std::to_string(label.ctx.rows);
}

Json expansion_json(const SchurVector& v) {
  Json out = Json::object();
  for (const auto& [index, c] : v.terms()) out[index.to_string()] = c;
  return out;
}

std::optional<int> env_guard() {
  const char* raw = std::getenv("SCHURPOS_MAX_SIZE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 64)
    throw std::invalid_argument(std::string("SCHURPOS_MAX_SIZE must be an integer in 1..64, got '") +
                                raw + "'");
  return static_cast<int>(value);
}

inline constexpr int kExpansionGuard = 14;
inline constexpr int kPosetGuard = 7;

/// Explicit flag, then the environment, then the built-in default.
int resolve_guard(int flag, int fallback) {
  if (flag > 0) return flag;
  return env_guard().value_or(fallback);
}

void require_within(int size, int guard, const std::string& what) {
  if (size > guard)
    throw std::out_of_range(what + " of size " + std::to_string(size) + " exceeds the size guard " +
                            std::to_string(guard) + " (raise it with --max-size or SCHURPOS_MAX_SIZE)");
}

std::string compact_composition(const Composition& alpha) {
  const auto& parts = alpha.parts();
  if (std::all_of(parts.begin(), parts.end(), [](int p) { return p < 10; })) {
    std::string out;
    for (int p : parts) out += static_cast<char>('0' + p);
    return out;
  }
  return alpha.to_string();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

mf::RectLabel parse_label_arg(std::string_view text, mf::Context ctx) {
  Cursor cur(text);
  if (cur.eat("r:")) {
    Composition alpha(cur.numbers());
    cur.finish();
    if (alpha.size() != ctx.n || static_cast<int>(alpha.length()) != ctx.rows)
      throw std::invalid_argument("ribbon r:" + alpha.to_string() + " is not in M(" +
                                  std::to_string(ctx.n) + "," + std::to_string(ctx.rows) + ")");
    return mf::label_of_ribbon(alpha);
  }
  const bool bracket = cur.eat('[');
  const int a = cur.number();
  cur.expect(',');
  const int b = cur.number();
  if (bracket) cur.expect(']');
  if (cur.eat('@')) {
    const int n = cur.number();
    cur.expect(',');
    const int rows = cur.number();
    if (n != ctx.n || rows != ctx.rows)
      throw std::invalid_argument("label context " + std::to_string(n) + "," +
                                  std::to_string(rows) + " does not match --n/--rows");
  }
  cur.finish();
  return mf::normalize(a, b, ctx);
}

int report_result(const Report& report, std::ostream& out) {
  if (report.ok()) {
    out << "OK: 0 disagreements\n";
    return kExitOk;
  }
  out << "FAIL: " << report.disagreements.size() << " disagreements\n";
  for (const auto& d : report.disagreements) out << "  " << d << "\n";
  return kExitDisagreement;
}

}  // namespace

ShapeSpec parse_shape(std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty shape");
  if (cur.eat("r:")) {
    std::vector<int> parts = cur.numbers();
    cur.finish();
    return RibbonSpec{Composition(std::move(parts))};
  }
  if (cur.eat('[')) {
    const int a = cur.number();
    cur.expect(',');
    const int b = cur.number();
    cur.expect(']');
    cur.expect('@');
    const int n = cur.number();
    cur.expect(',');
    const int rows = cur.number();
    cur.finish();
    return LabelSpec{mf::normalize(a, b, mf::Context::make(n, rows))};
  }
  Partition outer = Partition::trimmed(cur.numbers());
  Partition inner;
  if (cur.eat('/') && !cur.at_end()) inner = Partition::trimmed(cur.numbers());
  cur.finish();
  const SkewDiagram d(outer, inner);
  if (d.size() == 0) throw std::invalid_argument("empty diagram");
  return SkewSpec{std::move(outer), std::move(inner)};
}

SkewDiagram diagram_of(const ShapeSpec& spec) {
  if (const auto* s = std::get_if<SkewSpec>(&spec)) return SkewDiagram(s->outer, s->inner);
  if (const auto* r = std::get_if<RibbonSpec>(&spec)) return ribbon_of(r->alpha);
  return ribbon_of(mf::ribbon_of_label(std::get<LabelSpec>(spec).label));
}

std::string render(const ShapeSpec& spec) {
  if (const auto* r = std::get_if<RibbonSpec>(&spec)) return "r:" + r->alpha.to_string();
  if (const auto* l = std::get_if<LabelSpec>(&spec)) return label_text(l->label);
  return diagram_of(spec).to_string();
}

namespace {

struct PosetArgs {
  int n = 0;
  bool ribbons = false;
  int rows = 0;
  bool mf_only = false;
  std::string format = "json";
  std::string label_style = "comp";
  int max_size = 0;
  unsigned threads = 0;
};

int run_poset(const PosetArgs& a, std::ostream& out) {
  if (a.n < 1) throw std::invalid_argument("--n must be positive");
  const bool ribbons = a.ribbons || a.rows > 0 || a.mf_only;
  if (a.rows < 0 || a.rows > a.n)
    throw std::invalid_argument("--rows must lie in 1.." + std::to_string(a.n));
  const bool rect = a.label_style == "rect";
  if (rect && !(a.mf_only && a.rows >= 2 && a.rows <= a.n - 1))
    throw std::invalid_argument("--label-style rect needs --mf and 2 <= --rows <= N-1");

  std::vector<SkewDiagram> diagrams;
  BuildOptions options;
  options.threads = a.threads;
  if (ribbons) {
    options.max_size = resolve_guard(a.max_size, kExpansionGuard);
    require_within(a.n, options.max_size, "ribbon poset");
    diagrams = ribbon_diagrams(a.n, a.rows, a.mf_only);
  } else {
    const int guard = resolve_guard(a.max_size, kPosetGuard);
    require_within(a.n, guard, "P_N enumeration");
    options.max_size = std::max(guard, a.n);
    diagrams = enumerate_basic_skew(a.n, std::max(guard, a.n));
  }
  const PosetModel model = build_poset(diagrams, options);

  auto member_text = [&](const SkewDiagram& d) {
    return ribbons ? "r:" + composition_of(d).to_string() : d.to_string();
  };
  auto node_label = [&](const PosetClass& c) {
    if (rect) return mf::label_of_ribbon(composition_of(c.members.front())).to_string();
    std::string label;
    for (const auto& d : c.members) {
      if (!label.empty()) label += " = ";
      label += ribbons ? compact_composition(composition_of(d)) : d.to_string();
    }
    return label;
  };

  if (a.format == "dot") {
    out << "digraph P {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < model.size(); ++i)
      out << "  n" << i << " [label=\"" << dot_escape(node_label(model.classes[i])) << "\"];\n";
    for (const auto& [lo, hi] : model.hasse()) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return kExitOk;
  }

  Json classes = Json::array();
  for (std::size_t i = 0; i < model.size(); ++i) {
    const PosetClass& c = model.classes[i];
    Json entry;
    entry["id"] = i;
    Json members = Json::array();
    for (const auto& d : c.members) members.push_back(member_text(d));
    entry["members"] = members;
    if (rect) entry["label"] = node_label(c);
    entry["expansion"] = expansion_json(c.expansion);
    classes.push_back(entry);
  }
  Json hasse = Json::array();
  for (const auto& [lo, hi] : model.hasse()) hasse.push_back({lo, hi});
  Json doc;
  doc["classes"] = classes;
  doc["hasse"] = hasse;
  out << doc.dump() << "\n";
  return kExitOk;
}

struct MfArgs {
  int n = 0;
  int rows = 0;
  std::string first;
  std::string second;
};

int run_mf(const std::string& action, const MfArgs& a, std::ostream& out) {
  if (a.n < 1 || a.rows < 1 || a.rows > a.n)
    throw std::invalid_argument("need 1 <= --rows <= --n");
  if (a.rows == 1 || a.rows == a.n) {
    // Degenerate: the single ribbon (N) or the single column.
    const Composition alpha(std::vector<int>(a.rows == 1 ? 1 : a.n, a.rows == 1 ? a.n : 1));
    if (action == "list") {
      Json entry;
      entry["label"] = nullptr;
      entry["ribbon"] = "r:" + alpha.to_string();
      out << Json::array({entry}).dump() << "\n";
      return kExitOk;
    }
    if (action == "covers") {
      out << "[]\n";
      return kExitOk;
    }
    throw std::invalid_argument("the singleton poset for rows " + std::to_string(a.rows) +
                                " has no rectangle labels");
  }
  const mf::Context ctx = mf::Context::make(a.n, a.rows);

  if (action == "list") {
    Json doc = Json::array();
    for (const auto& label : mf::elements(a.n, a.rows)) {
      Json entry;
      entry["label"] = label.to_string();
      entry["ribbon"] = "r:" + mf::ribbon_of_label(label).to_string();
      doc.push_back(entry);
    }
    out << doc.dump() << "\n";
    return kExitOk;
  }
  if (action == "covers") {
    Json doc = Json::array();
    for (const auto& [lo, hi] : mf::covers(a.n, a.rows))
      doc.push_back({lo.to_string(), hi.to_string()});
    out << doc.dump() << "\n";
    return kExitOk;
  }
  const mf::RectLabel x = parse_label_arg(a.first, ctx);
  if (action == "schubert") {
    const auto [p, q] = mf::schubert_pair(x);
    out << Json::array({p.to_string(), q.to_string()}).dump() << "\n";
    return kExitOk;
  }
  const mf::RectLabel y = parse_label_arg(a.second, ctx);
  if (action == "meet") out << mf::meet(x, y).to_string() << "\n";
  if (action == "join") out << mf::join(x, y).to_string() << "\n";
  if (action == "leq") out << (mf::leq_s_closed(x, y) ? "true" : "false") << "\n";
  return kExitOk;
}

Json trim_json(const mf::TrimReport& t) {
  Json doc;
  doc["elements"] = t.elements;
  doc["join_irreducibles"] = t.join_irreducibles;
  doc["meet_irreducibles"] = t.meet_irreducibles;
  doc["longest_chain_elements"] = t.longest_chain_elements;
  doc["left_modular_max_chain"] = t.left_modular_max_chain;
  doc["left_modular_every_max_chain"] = t.left_modular_every_max_chain;
  doc["spine_distributive"] = t.spine_distributive;
  doc["is_lattice"] = t.is_lattice;
  doc["is_trim"] = t.is_trim();
  return doc;
}

struct VerifyArgs {
  int max_size = 0;
  int n = 0;
  int rows = 0;
  unsigned threads = 0;
};

int run_verify(const std::string& what, const VerifyArgs& a, std::ostream& out) {
  const int guard = resolve_guard(0, kExpansionGuard);
  if (what == "fourcovers" || what == "onlycovers" || what == "mflemma") {
    if (a.max_size < 1) throw std::invalid_argument("--max-size must be positive");
    require_within(a.max_size, guard, what + " sweep");
    ExpansionCache cache(guard);
    if (what == "fourcovers") return report_result(verify_fourcovers(a.max_size, cache), out);
    if (what == "onlycovers") return report_result(verify_onlycovers(a.max_size, cache), out);
    return report_result(verify_mflemma(a.max_size, cache), out);
  }
  if (what == "convexity") {
    if (a.n < 1) throw std::invalid_argument("--n must be positive");
    const int poset_guard = resolve_guard(0, kPosetGuard);
    require_within(a.n, poset_guard, "P_N enumeration");
    BuildOptions options;
    options.max_size = std::max(guard, a.n);
    options.threads = a.threads;
    return report_result(verify_convexity(a.n, options), out);
  }
  mf::Context::make(a.n, a.rows);
  if (what == "bigdiff") {
    require_within(a.n, guard, "bigdiff sweep");
    ExpansionCache cache(guard);
    Report report = verify_bigdiff(a.n, a.rows, cache);
    report.merge(verify_classes(a.n, a.rows, cache));
    report.merge(verify_lattice_ops(a.n, a.rows));
    return report_result(report, out);
  }
  out << trim_json(mf::trim_report(a.n, a.rows)).dump() << "\n";
  return report_result(verify_trim(a.n, a.rows), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew Schur expansions and Schur-positivity posets", "schurpos"};
  app.require_subcommand(1);

  std::string shape_a;
  std::string shape_b;
  int max_size = 0;

  auto* expand_cmd = app.add_subcommand("expand", "Schur expansion of a shape as JSON");
  expand_cmd->add_option("shape", shape_a, "4,3,3/2,2 | r:2,1,3 | [3,5]@15,6")->required();
  expand_cmd->add_option("--max-size", max_size, "Largest shape to expand (default 14)");

  bool show_difference = false;
  auto* compare_cmd = app.add_subcommand("compare", "Schur-positivity comparison of two shapes");
  compare_cmd->add_option("a", shape_a, "First shape")->required();
  compare_cmd->add_option("b", shape_b, "Second shape")->required();
  compare_cmd->add_flag("--show-difference", show_difference,
                        "Print the positive difference as JSON");
  compare_cmd->add_option("--max-size", max_size, "Largest shape to expand (default 14)");

  PosetArgs poset_args;
  auto* poset_cmd = app.add_subcommand("poset", "Schur-positivity poset as JSON or DOT");
  poset_cmd->add_option("--n", poset_args.n, "Number of cells")->required();
  poset_cmd->add_flag("--ribbons", poset_args.ribbons, "Ribbons only");
  poset_cmd->add_option("--rows", poset_args.rows, "Fix the ribbon row count");
  poset_cmd->add_flag("--mf", poset_args.mf_only, "Multiplicity-free ribbons only");
  poset_cmd->add_option("--format", poset_args.format)
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  poset_cmd->add_option("--label-style", poset_args.label_style)
      ->check(CLI::IsMember({"comp", "rect"}))
      ->capture_default_str();
  poset_cmd->add_option("--max-size", poset_args.max_size,
                        "Size guard (default 7 for P_N, 14 for ribbons)");
  poset_cmd->add_option("--threads", poset_args.threads, "Worker threads (0 = all cores)");

  MfArgs mf_args;
  auto* mf_cmd = app.add_subcommand("mf", "Closed-form lattice of multiplicity-free ribbons");
  mf_cmd->add_option("--n", mf_args.n, "Number of cells")->required();
  mf_cmd->add_option("--rows", mf_args.rows, "Number of rows")->required();
  mf_cmd->require_subcommand(1);
  mf_cmd->add_subcommand("list", "Elements with their ribbons");
  mf_cmd->add_subcommand("covers", "Cover relations, lower first");
  for (const char* name : {"meet", "join", "leq"}) {
    auto* sub = mf_cmd->add_subcommand(name, std::string(name) + " of two labels");
    sub->add_option("a", mf_args.first, "[a,b] or r:...")->required();
    sub->add_option("b", mf_args.second, "[a,b] or r:...")->required();
  }
  auto* schubert_cmd = mf_cmd->add_subcommand("schubert", "Schubert index pair of a label");
  schubert_cmd->add_option("a", mf_args.first, "[a,b] or r:...")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against LR expansions");
  verify_cmd->require_subcommand(1);
  auto sweep = [&](const char* name, const char* help) {
    auto* sub = verify_cmd->add_subcommand(name, help);
    sub->add_option("--max-size", verify_args.max_size, "Largest total size")->required();
  };
  sweep("fourcovers", "Covering identities");
  sweep("onlycovers", "Non-relations and their witnesses");
  sweep("mflemma", "Multiplicity-free ribbon classification");
  for (auto [name, help] : {std::pair{"bigdiff", "Order, classes and lattice operations"},
                             std::pair{"trim", "Trim lattice statistics"}}) {
    auto* sub = verify_cmd->add_subcommand(name, help);
    sub->add_option("--n", verify_args.n, "Number of cells")->required();
    sub->add_option("--rows", verify_args.rows, "Number of rows")->required();
  }
  auto* convexity_cmd = verify_cmd->add_subcommand("convexity", "Convex subposets of P_N");
  convexity_cmd->add_option("--n", verify_args.n, "Number of cells")->required();
  convexity_cmd->add_option("--threads", verify_args.threads, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand_cmd->parsed()) {
      const SkewDiagram d = diagram_of(parse_shape(shape_a));
      const int guard = resolve_guard(max_size, kExpansionGuard);
      require_within(d.size(), guard, "shape");
      out << expansion_json(expand(d, guard)).dump() << "\n";
      return kExitOk;
    }
    if (compare_cmd->parsed()) {
      const SkewDiagram a = diagram_of(parse_shape(shape_a));
      const SkewDiagram b = diagram_of(parse_shape(shape_b));
      const int guard = resolve_guard(max_size, kExpansionGuard);
      require_within(std::max(a.size(), b.size()), guard, "shape");
      const ComparisonResult r = compare_diagrams(a, b, guard);
      out << to_string(r.tag) << "\n";
      if (show_difference && r.difference) out << expansion_json(*r.difference).dump() << "\n";
      return kExitOk;
    }
    if (poset_cmd->parsed()) return run_poset(poset_args, out);
    if (mf_cmd->parsed()) {
      for (auto* sub : mf_cmd->get_subcommands())
        if (sub->parsed()) return run_mf(sub->get_name(), mf_args, out);
    }
    if (verify_cmd->parsed()) {
      for (auto* sub : verify_cmd->get_subcommands())
        if (sub->parsed()) return run_verify(sub->get_name(), verify_args, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace schurpos::cli
