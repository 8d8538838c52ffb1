#pragma once

// Canonical forms of subspaces (and tuples of subspaces) of GF(2)^len under
// coordinate permutation.
//
// The search is individualization-refinement on an edge-colored complete
// graph whose pair colors count codewords through both endpoints, split by
// weight. Leaves are compared by the RREF bases of the relabeled spaces and
// the smallest one wins. Automorphisms discovered along the way prune
// equivalent subtrees. The result is a complete invariant: two inputs get
// the same certificate exactly when some permutation maps one onto the other.

#include <cstddef>
#include <vector>

#include "z2ring/gf2.hpp"
#include "z2ring/permutation.hpp"
#include "z2ring/subspace.hpp"

namespace z2ring {

struct CanonicalForm {
  /// RREF bases of labeling.apply(space_k), in input order.
  std::vector<Gf2Matrix> certificate;
  /// Maps input coordinates to canonical positions.
  Permutation labeling;
  std::size_t leaves_visited = 0;
  std::size_t automorphism_generators = 0;

  std::vector<Subspace> spaces() const;
};

/// All spaces must share one ambient length. Throws DimensionMismatch otherwise.
CanonicalForm canonical_form(const std::vector<Subspace>& spaces);

/// Certificate of a single subspace.
Gf2Matrix canonical_code(const Subspace& code);

}  // namespace z2ring
