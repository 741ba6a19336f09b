#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pervlab/poly.hpp"

namespace pervlab {

// Ranks of reduced Milnor-fiber cohomology for an isolated hypersurface
// singularity in n variables: everything sits in degree n-1 with total rank
// equal to the Milnor number. Degrees with rank zero are omitted.
struct VanishingProfile {
    std::size_t milnor_number = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ranks;  // (degree, rank)
};

// [df/dx1, ..., df/dxn].
std::vector<Poly> jacobian_ideal(const Poly& f);

// Reduced Groebner basis of <gens> under `order` (Buchberger, normal
// selection strategy, full interreduction). Output is monic and sorted by
// ascending leading monomial, so it is a canonical form of the ideal.
std::vector<Poly> groebner(const std::vector<Poly>& gens, const MonomialOrder& order);

// Remainder of p on division by gens (every monomial fully reduced).
Poly normal_form(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& order);

// Monomials outside the leading-term ideal of a reduced Groebner basis, or
// nullopt when the quotient is infinite-dimensional (some variable has no
// pure power among the leading terms).
std::optional<std::size_t> standard_monomial_count(const std::vector<Poly>& gb,
                                                   const MonomialOrder& order);

// dim_Q Q[x]/(df/dx1,...,df/dxn); nullopt signals a non-isolated singularity
// (infinite-dimensional quotient). Computed with the given order, default
// grevlex over the polynomial's own variable order.
std::optional<std::size_t> milnor_number(const Poly& f);
std::optional<std::size_t> milnor_number(const Poly& f, const MonomialOrder& order);

std::optional<VanishingProfile> vanishing_profile(const Poly& f);
std::optional<VanishingProfile> vanishing_profile(const Poly& f, const MonomialOrder& order);

}  // namespace pervlab
