#include <doctest.h>

#include <cstdlib>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "schurpos/cli.hpp"
#include "schurpos/positivity.hpp"

using namespace schurpos;
using namespace schurpos::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("shape parsing") {
  const ShapeSpec skew = parse_shape("4,3,3/2,2");
  REQUIRE(std::holds_alternative<SkewSpec>(skew));
  CHECK(std::get<SkewSpec>(skew).outer == Partition{4, 3, 3});
  CHECK(std::get<SkewSpec>(skew).inner == Partition{2, 2});

  const ShapeSpec ribbon = parse_shape("r:2,1,3");
  REQUIRE(std::holds_alternative<RibbonSpec>(ribbon));
  CHECK(std::get<RibbonSpec>(ribbon).alpha == Composition{2, 1, 3});

  const ShapeSpec label = parse_shape("[3,5]@15,6");
  REQUIRE(std::holds_alternative<LabelSpec>(label));
  const mf::RectLabel& l = std::get<LabelSpec>(label).label;
  CHECK(l.a == 3);
  CHECK(l.b == 5);
  CHECK(l.ctx == mf::Context::make(15, 6));

  CHECK(render(parse_shape(" 4, 3,3 / 2 ,2 ")) == "4,3,3/2,2");
  CHECK(render(parse_shape("3,1/2")) == "2,1/1");
  CHECK(render(parse_shape("3,2/")) == "3,2");
  CHECK(render(parse_shape("r: 2,1 ,3")) == "r:2,1,3");
  CHECK(render(parse_shape("[ 5,5 ] @ 12,6")) == "[5,1]@12,6");
  CHECK(diagram_of(parse_shape("r:2,1,3")) == diagram_of(parse_shape("4,3,3/2,2")));
  CHECK(diagram_of(label) == ribbon_of({5, 1, 1, 6, 1, 1}));

  for (const char* text : {"4,3,3/2,2", "r:1,7,1,1,1,1", "[2,3]@12,6", "5,5,2/4,1", "3"}) {
    const std::string once = render(parse_shape(text));
    CHECK(render(parse_shape(once)) == once);
  }
}

TEST_CASE("shape parse errors") {
  auto position = [](const char* text) -> long {
    try {
      parse_shape(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("") == 0);
  CHECK(position("4,x") == 2);
  CHECK(position("4,3;") == 3);
  CHECK(position("r:") == 2);
  CHECK(position("[3,5]15,6") == 5);
  CHECK(position("[3 5]@15,6") == 3);
  CHECK_THROWS_AS(parse_shape("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("2/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("r:2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[9,1]@12,6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[1,1]@12,1"), std::invalid_argument);
}

TEST_CASE("expand and compare") {
  Outcome o = call({"expand", "3,2,1/2,1"});
  CHECK(o.code == 0);
  CHECK(o.out == "{\"3\":1,\"2,1\":2,\"1,1,1\":1}\n");
  o = call({"expand", "r:1,2"});
  CHECK(o.out == "{\"2,1\":1}\n");

  CHECK(call({"compare", "r:1,3", "r:3,1"}).out == "equal\n");
  CHECK(call({"compare", "r:2,2", "r:1,3"}).out == "greater\n");
  CHECK(call({"compare", "r:1,3", "r:2,2"}).out == "less\n");
  CHECK(call({"compare", "r:2,2", "r:1,1,2"}).out == "incomparable\n");
  CHECK(call({"compare", "r:2,2", "r:1,3", "--show-difference"}).out == "greater\n{\"2,2\":1}\n");
  CHECK(call({"compare", "r:1,3", "r:3,1", "--show-difference"}).out == "equal\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"expand"}).code == kExitUsage);
  CHECK(call({"expand", "4,x"}).code == kExitUsage);
  CHECK(call({"poset", "--n", "4", "--format", "svg"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);

  const Outcome bad = call({"expand", "1,2"});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("weakly decreasing") != std::string::npos);
  CHECK(call({"expand", "r:9,9"}).code == kExitDomain);
  CHECK(call({"expand", "r:9,9", "--max-size", "18"}).code == kExitOk);
  CHECK(call({"poset", "--n", "8"}).code == kExitDomain);
  CHECK(call({"mf", "--n", "12", "--rows", "6", "meet", "[9,9]", "[1,1]"}).code == kExitDomain);
}

TEST_CASE("size guard from the environment") {
  setenv("SCHURPOS_MAX_SIZE", "5", 1);
  const Outcome o = call({"expand", "r:3,3"});
  CHECK(o.code == kExitDomain);
  CHECK(o.err.find("size guard 5") != std::string::npos);
  CHECK(call({"expand", "r:3,3", "--max-size", "6"}).code == kExitOk);
  CHECK(call({"poset", "--n", "6"}).code == kExitDomain);
  setenv("SCHURPOS_MAX_SIZE", "abc", 1);
  CHECK(call({"expand", "r:3,3"}).code == kExitDomain);
  unsetenv("SCHURPOS_MAX_SIZE");
  CHECK(call({"expand", "r:3,3"}).code == kExitOk);
}

TEST_CASE("poset as JSON") {
  const Outcome o = call({"poset", "--n", "4"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  const PosetModel p = build_poset(enumerate_basic_skew(4));
  REQUIRE(doc["classes"].size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = doc["classes"][i];
    CHECK(c["id"] == i);
    REQUIRE(c["members"].size() == p.classes[i].members.size());
    for (std::size_t k = 0; k < c["members"].size(); ++k)
      CHECK(diagram_of(parse_shape(c["members"][k].get<std::string>())) == p.classes[i].members[k]);
    SchurVector e(4);
    for (const auto& [key, value] : c["expansion"].items()) {
      const ShapeSpec s = parse_shape(key);
      e.add(std::get<SkewSpec>(s).outer, value.get<Coefficient>());
    }
    CHECK(e == p.classes[i].expansion);
  }
  std::vector<Edge> hasse;
  for (const auto& edge : doc["hasse"]) hasse.emplace_back(edge[0], edge[1]);
  CHECK(hasse == p.hasse());
  CHECK(call({"poset", "--n", "4"}).out == o.out);
}

TEST_CASE("ribbon posets as DOT") {
  const Outcome o = call({"poset", "--n", "9", "--ribbons", "--rows", "4", "--format", "dot"});
  REQUIRE(o.code == 0);
  CHECK(o.out.rfind("digraph P {", 0) == 0);
  const PosetModel p = build_poset(ribbon_diagrams(9, 4));
  std::vector<Edge> edges;
  const std::regex edge_re(R"(n(\d+) -> n(\d+);)");
  for (std::sregex_iterator it(o.out.begin(), o.out.end(), edge_re), end; it != end; ++it)
    edges.emplace_back(std::stoul((*it)[1]), std::stoul((*it)[2]));
  CHECK(edges == p.hasse());
  CHECK(o.out.find("[label=\"4311 = 1134\"]") != std::string::npos);

  const Outcome rect =
      call({"poset", "--n", "12", "--mf", "--rows", "6", "--format", "dot", "--label-style", "rect"});
  REQUIRE(rect.code == 0);
  CHECK(rect.out.find("[label=\"[3,3]\"]") != std::string::npos);
  CHECK(call({"poset", "--n", "12", "--rows", "6", "--label-style", "rect"}).code == kExitDomain);
}

TEST_CASE("mf subcommands") {
  const std::vector<std::string> ctx{"mf", "--n", "12", "--rows", "6"};
  auto with = [&](std::vector<std::string> more) {
    std::vector<std::string> args = ctx;
    args.insert(args.end(), more.begin(), more.end());
    return call(args);
  };
  const auto list = nlohmann::json::parse(with({"list"}).out);
  CHECK(list.size() == 26);
  CHECK(list[0]["label"] == "[1,1]");
  const auto covers = nlohmann::json::parse(with({"covers"}).out);
  CHECK(covers.size() == 41);
  CHECK(with({"meet", "[5,3]", "[1,4]"}).out == "[5,2]\n");
  CHECK(with({"join", "1,2", "2,1"}).out == "[2,2]\n");
  CHECK(with({"leq", "[5,1]", "[5,2]"}).out == "true\n");
  CHECK(with({"leq", "[1,2]", "[2,1]"}).out == "false\n");
  CHECK(with({"meet", "r:1,1,1,1,7,1", "[1,6]@12,6"}).out == "[1,6]\n");
  CHECK(with({"meet", "[1,1]@12,5", "[1,1]"}).code == kExitDomain);
  CHECK(call({"mf", "--n", "15", "--rows", "6", "schubert", "[3,5]"}).out ==
        "[\"3,3,3,3,3\",\"9,9,4,4,4\"]\n");

  CHECK(call({"mf", "--n", "5", "--rows", "1", "list"}).out ==
        "[{\"label\":null,\"ribbon\":\"r:5\"}]\n");
  CHECK(call({"mf", "--n", "5", "--rows", "5", "covers"}).out == "[]\n");
  CHECK(call({"mf", "--n", "5", "--rows", "5", "meet", "[1,1]", "[1,1]"}).code == kExitDomain);
}

TEST_CASE("verify subcommands") {
  Outcome o = call({"verify", "bigdiff", "--n", "12", "--rows", "6"});
  CHECK(o.code == 0);
  CHECK(o.out == "OK: 0 disagreements\n");
  CHECK(call({"verify", "fourcovers", "--max-size", "8"}).out == "OK: 0 disagreements\n");
  CHECK(call({"verify", "onlycovers", "--max-size", "8"}).out == "OK: 0 disagreements\n");
  CHECK(call({"verify", "mflemma", "--max-size", "8"}).out == "OK: 0 disagreements\n");
  CHECK(call({"verify", "convexity", "--n", "5"}).out == "OK: 0 disagreements\n");
  o = call({"verify", "trim", "--n", "12", "--rows", "6"});
  CHECK(o.code == 0);
  CHECK(o.out.find("\"join_irreducibles\":9") != std::string::npos);
  o = call({"verify", "trim", "--n", "6", "--rows", "2"});
  CHECK(o.code == kExitDisagreement);
  CHECK(o.out.find("FAIL: ") != std::string::npos);
  CHECK(call({"verify", "bigdiff", "--n", "12"}).code == kExitUsage);
  CHECK(call({"verify", "fourcovers", "--max-size", "30"}).code == kExitDomain);
}
