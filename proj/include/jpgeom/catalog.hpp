#pragma once
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "jpgeom/grading.hpp"
#include "jpgeom/jordan.hpp"
#include "jpgeom/lie.hpp"

namespace jpgeom {

// A named example with all of its derived objects materialized. The params
// record how the entry was built, including the Euler representative chosen
// for the ambient (traceless over the rationals, block projector inside gl
// over prime fields, where the traceless form may not exist).
struct CatalogEntry {
  std::string name;
  nlohmann::json params;
  AlgebraRef algebra;
  Grading grading;
  JordanPair pair;
  std::optional<Involution> involution;
};

// sl_n (rationals) or gl_n (prime fields) with the (p, n-p) block grading.
// The pair is the rectangular one extracted from the grading, the involution
// is X -> -X^T. Requires 1 <= p < n.
CatalogEntry make_sl_block(std::size_t n, std::size_t p, const FieldSpec& field);

// Hom-blocks M_{p,q} and M_{q,p} with T(X,Y,Z) = XYZ + ZYX in the "sec8.5"
// convention and its negative in "eq3.1".
JordanPair make_rectangular_pair(std::size_t p, std::size_t q, const FieldSpec& field,
                                 const std::string& convention);

// Zero triple product on dims (np, nm); products come from the embedding.
CatalogEntry make_trivial_pair(std::size_t np, std::size_t nm, const FieldSpec& field);

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(const std::string& name, const FieldSpec& field);

nlohmann::json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);

}  // namespace jpgeom
