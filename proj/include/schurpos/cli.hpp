#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schurpos/diagram.hpp"
#include "schurpos/mf_lattice.hpp"
#include "schurpos/partition.hpp"

namespace schurpos::cli {

/// Malformed shape text. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct SkewSpec {
  Partition outer;
  Partition inner;
};

struct RibbonSpec {
  Composition alpha;
};

struct LabelSpec {
  mf::RectLabel label;
};

using ShapeSpec = std::variant<SkewSpec, RibbonSpec, LabelSpec>;

/// Accepts "4,3,3/2,2" (inner optional), "r:2,1,3" and "[3,5]@15,6".
/// Whitespace is ignored. Throws ParseError on malformed text and
/// std::invalid_argument on a well-formed but invalid shape.
ShapeSpec parse_shape(std::string_view text);

/// Canonical text: skew shapes in basic form, labels normalized.
std::string render(const ShapeSpec& spec);

SkewDiagram diagram_of(const ShapeSpec& spec);

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurpos::cli
