#pragma once

// JSON group-spec and function files (schema_version 1).
//
// Group spec, finite:
//   {"schema_version": 1, "kind": "finite_semidirect", "role": "primal",
//    "K": {"divisors": [5]},
//    "H": {"labels": [...], "automorphisms": [[[2]], ...],
//          "cayley": [[...], ...],      (optional)
//          "delta": [1.0, ...]}}        (optional)
// Group spec, continuum:
//   {"schema_version": 1, "kind": "affine_continuum",
//    "grid": {"a": {"min":1,"max":2,"count":64}, "b": {...}, "omega": {...}}}
// Function file:
//   {"schema_version": 1, "side": "primal" | "dual",
//    "entries": [{"h": "2", "k_or_omega": [1], "re": 0.5, "im": 0.0}, ...]}
//   For the continuum "h" is the a coordinate and "k_or_omega" holds b or
//   omega; both must sit on grid nodes. Unlisted points are zero.
//
// Unknown fields are rejected everywhere.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tauh/affine.hpp"
#include "tauh/catalog.hpp"
#include "tauh/semidirect.hpp"

namespace tauh::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json group_spec_to_json(const TauSystem& sys);
TauSystem group_spec_from_json(const Json& j,
                               std::int64_t max_order = kDefaultMaxOrder);

Json grid_spec_to_json(const affine::AffineGrid& grid);
affine::AffineGrid grid_spec_from_json(const Json& j);

Json function_to_json(const GroupFunction& f);
GroupFunction function_from_json(const Json& j, const TauSystem& sys);

Json affine_function_to_json(const affine::SampledAffineFunction& f);
affine::SampledAffineFunction affine_function_from_json(
    const Json& j, const affine::AffineGrid& grid);

// A group spec resolved from a catalog name, "affine-continuum:default", or
// a JSON file path.
struct LoadedSpec {
  std::string name;
  std::optional<TauSystem> finite;
  std::optional<affine::AffineGrid> continuum;
  std::optional<CatalogEntry> catalog;
};

LoadedSpec load_group_spec(const std::string& name_or_path,
                           std::int64_t max_order = kDefaultMaxOrder);

Json parse_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace tauh::io
