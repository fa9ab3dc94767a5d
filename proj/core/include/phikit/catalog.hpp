#pragma once

// Named morphisms used throughout the library: the difference morphisms for
// the three sign classes of both digit sums, their building blocks, and the
// graded machinery generating the digit sums themselves.

#include <optional>
#include <vector>

#include "phikit/graded.hpp"
#include "phikit/morphism.hpp"

namespace phikit {

struct CatalogEntry {
  std::string name;
  std::string description;
  Morphism morphism;
  Symbol seed;
  std::optional<Coding> coding;  // projection applied to the fixed point
};

const std::vector<CatalogEntry>& finite_catalog();

// Null if the name is unknown.
const CatalogEntry* find_catalog(const std::string& name);

// Graded machinery for the Zeckendorf digit sum.
const GradedMorphism& tau_morphism();
GradedSymbol tau_seed();
const GradedOutputMap& tau_output();

// Graded machinery for the base-phi digit sum.
const GradedMorphism& gamma_morphism();
GradedSymbol gamma_seed();
const GradedDecoration& gamma_decoration();

// x_sigma is the decoration of the fixed point of g by a => c2 c3, b => c0 c1.
const Decoration& sigma_cover_decoration();

// Decorations of the fixed point of g that rebuild the base-phi difference
// morphisms.  `target` names the catalog morphism the cover must reproduce
// ("" when only the projected stream is pinned down).
struct DecorationInstance {
  std::string name;
  Symbol seed;  // seed of g
  Decoration decoration;
  std::string target;
};

const std::vector<DecorationInstance>& decoration_instances();

}  // namespace phikit
