#pragma once

// Declarative configuration: named variety specs (with optional Gram
// matrices and intersection overrides), named cover setups and defaults.
//
//   {
//     "varieties": {"k3line": {"kind": "quartic-k3", "gram": [[4,1],[1,-2]]}},
//     "setups":    {"gm3-x7": {"kind": "gm3", "gram": [[10,7],[7,2]]}},
//     "box": 12
//   }

#include <map>
#include <optional>
#include <string>

#include "kul/grr.hpp"
#include "kul/serialize.hpp"

namespace kul {

struct SetupSpec {
  SetupKind kind{};
  std::optional<IntMatrix> gram;
};

struct Config {
  std::map<std::string, VarietySpec> varieties;
  std::map<std::string, SetupSpec> setups;
  std::optional<long> box;
};

/// Throws InputError on malformed input.
Config parse_config(const Json& j);
Config load_config(const std::string& path);
Json to_json(const Config& config);
Json to_json(const VarietySpec& spec);
Json to_json(const SetupSpec& spec);
Json to_json(const CoverSetup& setup);

VarietySpec variety_spec_from_json(const Json& j);
SetupSpec setup_spec_from_json(const Json& j);

/// A config name first, then the built-in short names (p3, qds, quartic-k3,
/// v5, gm3, gm4, degree10-k3). An explicit gram overrides the spec's.
VarietyModel resolve_variety(const std::string& name, const std::optional<IntMatrix>& gram,
                             const Config* config = nullptr);

/// A config name first, then the built-ins qds, qds-line (quartic K3 with a
/// line), gm3 and gm4. An explicit gram overrides the spec's.
CoverSetup resolve_setup(const std::string& name, const std::optional<IntMatrix>& gram,
                         const Config* config = nullptr);

/// Parses "a,b,c,d" (row-major, square) into a Gram matrix.
IntMatrix parse_gram(const std::string& text);

}  // namespace kul
