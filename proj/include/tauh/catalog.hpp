#pragma once

// Finite stand-ins for the affine, Weyl-Heisenberg and Euclidean motion
// groups, each paired with a dual-law oracle written from the closed-form
// laws rather than from the generic tau_dual construction.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tauh/semidirect.hpp"

namespace tauh {

using DualLaw =
    std::function<GTauHatElement(const GTauHatElement&, const GTauHatElement&)>;

struct CatalogEntry {
  std::string name;
  TauSystem system;
  DualLaw dual_law_oracle;
  std::string notes;
};

// K = Z_n, H = units of Z_n acting by multiplication.
CatalogEntry finite_affine(std::int64_t n);
// H = Z_n acting on K = Z_n x Z_n by tau_s(w, z) = (w, z + w s).
CatalogEntry finite_heisenberg(std::int64_t n);
// H = {I, J, J^2, J^3} (quarter-turn rotations) acting on K = Z_n^2.
CatalogEntry finite_motion(std::int64_t n);

// "affine:5", "heisenberg:3", "motion:4". nullopt if the family is unknown;
// DomainError on a bad parameter.
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

struct CatalogFamily {
  std::string prefix;
  std::string description;
};
std::vector<CatalogFamily> catalog_families();

}  // namespace tauh
