#pragma once

// The Hadamard (coordinatewise) product on GF(2)^2r and the subspaces it
// induces: the even-weight hyperplane V_2r and the annihilators
// V(v) = {x in V_2r : x o v in V_2r}.

#include <utility>
#include <vector>

#include "z2ring/gf2.hpp"
#include "z2ring/subspace.hpp"

namespace z2ring {

/// x o y; the all-ones vector is the unit and every vector is idempotent.
Gf2Vector hprod(const Gf2Vector& x, const Gf2Vector& y);

/// The even-weight vectors of length `len`.
Subspace even_subspace_of_length(std::size_t len);

/// V_2r, of dimension 2r - 1.
Subspace even_subspace(std::size_t r);

/// V(v), the kernel of x -> (sum x_i, sum_{i in supp v} x_i).
Subspace annihilator(const Gf2Vector& v);

/// V(v) = V1(v) (+) V2(v) with V1 = {x : v o x = x}, V2 = {x : v o x = 0}.
/// Requires v even, v != 0, v != all-ones.
std::pair<Subspace, Subspace> split_annihilator(const Gf2Vector& v);

/// V(v1) n ... n V(vk); the empty family gives V_2r of length `len`.
Subspace annihilator_family(const std::vector<Gf2Vector>& vs, std::size_t len);

/// Pointwise check over V_2r of V(u+v) = [V(u) n V(v)] u [V_2r \ (V(u) u V(v))].
/// Used as a test oracle; enumerates V_2r.
bool symmetric_law_check(const Gf2Vector& u, const Gf2Vector& v);

/// True iff u o v has even weight for every pair of basis vectors of W.
/// Throws InvalidArgument if W is not inside V_2r.
bool is_hadamard_closed(const Subspace& w);

/// Span of all pairwise products of the generators (including squares).
Subspace product_span(const std::vector<Gf2Vector>& generators, std::size_t len);

}  // namespace z2ring
