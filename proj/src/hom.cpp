#include "tolrep/hom.hpp"

#include "tolrep/relations.hpp"
#include "tolrep/tuple_iter.hpp"

namespace tolrep {

Hom::Hom(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<int> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != dom_.size())
    throw input_error("hom map has " + std::to_string(map_.size()) +
                      " entries for a domain of size " +
                      std::to_string(dom_.size()));
  for (int v : map_)
    if (v < 0 || v >= cod_.size())
      throw input_error("hom map entry " + std::to_string(v) +
                        " outside the codomain");
  if (!dom_.similar_to(cod_))
    throw input_error("hom between dissimilar algebras '" + dom_.name() +
                      "' and '" + cod_.name() + "'");

  hom_ok_ = true;
  std::vector<int> args, mapped;
  for (std::size_t i = 0; i < dom_.ops().size() && hom_ok_; ++i) {
    const int k = dom_.ops()[i].arity;
    args.assign(static_cast<std::size_t>(k), 0);
    mapped.assign(static_cast<std::size_t>(k), 0);
    for_each_tuple(static_cast<std::size_t>(dom_.size()), k,
                   [&](const std::vector<std::size_t>& t) {
                     if (!hom_ok_) return;
                     for (int j = 0; j < k; ++j) {
                       args[static_cast<std::size_t>(j)] = static_cast<int>(t[static_cast<std::size_t>(j)]);
                       mapped[static_cast<std::size_t>(j)] =
                           map_[t[static_cast<std::size_t>(j)]];
                     }
                     const int lhs = map_[static_cast<std::size_t>(
                         dom_.apply_unchecked(static_cast<int>(i), args.data(), k))];
                     const int rhs =
                         cod_.apply_unchecked(static_cast<int>(i), mapped.data(), k);
                     if (lhs != rhs) {
                       hom_ok_ = false;
                       violation_ = HomViolation{static_cast<int>(i), args};
                     }
                   });
  }

  std::vector<char> hit(static_cast<std::size_t>(cod_.size()), 0);
  for (int v : map_) hit[static_cast<std::size_t>(v)] = 1;
  surjective_ = true;
  for (char h : hit)
    if (!h) surjective_ = false;
}

BinRel kernel(const Hom& h) {
  if (!h.is_hom()) {
    std::string detail = "kernel requires a verified homomorphism";
    if (h.violation())
      detail += " (preservation fails for operation '" +
                h.dom().op(h.violation()->op_index).name + "')";
    throw contract_error(detail);
  }
  const int n = h.dom().size();
  BinRel ker(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h(x) == h(y)) ker.set(x, y);
  if (!is_congruence(h.dom(), ker))
    throw contradiction_error("kernel of a verified hom failed the congruence predicate");
  return ker;
}

BinRel image_of_relation(const Hom& h, const BinRel& beta) {
  if (!h.is_hom())
    throw contract_error("image of a relation requires a verified homomorphism");
  if (!h.surjective())
    throw contract_error("image of a relation requires a surjective homomorphism");
  if (beta.size() != h.dom().size())
    throw contract_error("relation does not live on the hom's domain");
  BinRel img(h.cod().size());
  const int n = beta.size();
  for (int x = 0; x < n; ++x)
    beta.for_each_in_row(x, [&](int y) { img.set(h(x), h(y)); });
  if (classify(h.dom(), beta).congruence()) {
    if (!is_tolerance(h.cod(), img))
      throw contradiction_error(
          "image of a congruence under a surjective hom failed the tolerance predicate");
  }
  return img;
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (!structurally_equal(inner.cod(), outer.dom()))
    throw contract_error("hom composition mismatch: inner codomain differs from outer domain");
  std::vector<int> map(inner.map().size());
  for (std::size_t i = 0; i < map.size(); ++i)
    map[i] = outer(inner.map()[i]);
  return Hom(inner.dom(), outer.cod(), std::move(map));
}

}  // namespace tolrep
