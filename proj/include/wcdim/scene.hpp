#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcdim/ifs.hpp"

namespace wcdim {

// One `set key value` line, value kept verbatim.
struct SceneOption {
  std::string key;
  std::string value;
};

// Parsed scene: the system under study plus run options.
//
// File format (UTF-8, line oriented, `#` comments):
//
//   space <dim> <euclidean|chebyshev|manhattan> box [lo...] [hi...] [diameter D]
//   map <name> similarity <ratio> [tx...] [rot <angle>] alpha <alpha-spec>
//   map <name> affine [[a11,...],[...]] [tx...] alpha <alpha-spec>
//   map <name> expr "expr1" ... "exprD" alpha <alpha-spec>
//   set <key> <value>
//
// where <alpha-spec> is one of
//   const <v>
//   piecewise 0:<v0> <t1>:<v1> ... <tk>:<vk>   (value attached at its breakpoint)
//   expr "<expression in t>"
struct SceneConfig {
  IFSystem system;
  std::vector<SceneOption> options;

  std::optional<std::string> option(std::string_view key) const;
  double option_number(std::string_view key, double fallback) const;
  long option_long(std::string_view key, long fallback) const;
};

// Throws SyntaxError, DuplicateMapName, FewerThanTwoMaps or
// CoefficientOutOfRange, each carrying a 1-based line and column.
SceneConfig parse_scene(std::string_view text);

// Canonical text form; parse(pretty_print(c)) is structurally equal to c.
std::string pretty_print(const SceneConfig& config);

bool structurally_equal(const SceneConfig& a, const SceneConfig& b);

}  // namespace wcdim
