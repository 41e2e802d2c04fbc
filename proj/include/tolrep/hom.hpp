#pragma once

#include <optional>
#include <vector>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"

namespace tolrep {

struct HomViolation {
  int op_index = -1;
  std::vector<int> args;  // domain tuple where preservation first fails
};

/// Total map between algebra universes. The structure check runs eagerly at
/// construction and is cached: downstream facts (kernels are congruences,
/// images of congruences are tolerances) rely on it.
class Hom {
 public:
  Hom(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<int> map);

  bool is_hom() const { return hom_ok_; }
  const std::optional<HomViolation>& violation() const { return violation_; }
  bool surjective() const { return surjective_; }

  int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& map() const { return map_; }
  const FiniteAlgebra& dom() const { return dom_; }
  const FiniteAlgebra& cod() const { return cod_; }

 private:
  FiniteAlgebra dom_;
  FiniteAlgebra cod_;
  std::vector<int> map_;
  bool hom_ok_ = false;
  bool surjective_ = false;
  std::optional<HomViolation> violation_;
};

/// ker h = {(x,y) : h(x) = h(y)}; always a congruence on the domain of a
/// verified hom (asserted).
BinRel kernel(const Hom& h);

/// Pointwise image {(h(x), h(y)) : (x,y) ∈ beta}. Requires a verified
/// surjective hom; when beta is a congruence the image is asserted to pass
/// the tolerance predicate.
BinRel image_of_relation(const Hom& h, const BinRel& beta);

/// outer ∘ inner (inner applied first).
Hom compose(const Hom& outer, const Hom& inner);

}  // namespace tolrep
