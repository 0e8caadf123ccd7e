#pragma once

// Weierstrass models with an optional diagonal automorphism, read from and
// written to a small JSON document:
//
//   {"name": "X66", "characteristic": 0,
//    "A": [9 coefficient strings], "B": [13 coefficient strings],
//    "action": {"kind": "scaling", "modulus": 66, "x": 2, "y": 3, "t": 6}}
//
// Index i of A and B is the exponent of t1. A translation action reads
// {"kind": "translation", "modulus": 6, "x": 2, "y": 3}: x and y are scaled
// by powers of a root of unity of that modulus and t -> t + 1.

#include "k3v/elliptic.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace k3v {

struct DiagonalAction {
  RootOfUnity x;
  RootOfUnity y;
  BaseAction base;
};

struct Fixture {
  std::string name;
  WeierstrassModel model;
  std::optional<DiagonalAction> action;
};

class FixtureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Fixture parse_fixture(const nlohmann::ordered_json& doc);
nlohmann::ordered_json fixture_to_json(const Fixture& f);

/// "X66" or "Y66"; throws FixtureError otherwise.
Fixture builtin_fixture(const std::string& name);
/// A built-in name or a path to a JSON file.
Fixture load_fixture(const std::string& name_or_path);

}  // namespace k3v
