#pragma once

#include "qons/freealg.hpp"

#include <vector>

namespace qons {

/// gamma^{kl} for the relation built on row `a_self` = a_ij of a pair whose
/// other entry is `a_other` = a_ji.  Throws std::out_of_range outside the
/// index ranges and std::invalid_argument for a non-affine pair pattern.
RationalFn gamma(int a_self, int a_other, int k, int l);

/// Upper bound (exclusive) of k: ceil(-a/2) with ceil(1/2) = 1.
int rho_count(int a);
/// Number of l values for a given k: -a - 2k.
int gamma_l_count(int a, int k);
/// True for table entries whose l-range is inferred rather than listed.
bool gamma_range_inferred(int a_self, int k);

struct OnsagerRelation {
    int i = 0, j = 0;
    int a_ij = 0;
    NCPoly lhs; // sum_r (-1)^r [1-a; r]_{q_i} A_i^{1-a-r} A_j A_i^r
    NCPoly rhs; // sum_k rho^k_ij sum_l (-1)^l gamma^{kl} A_i^{-2k-a-1-l} A_j A_i^l
    std::vector<Symbol> rho_symbols;

    NCPoly element() const { return lhs - rhs; } // vanishes in O_q
};

OnsagerRelation build_relation(const CartanData& cd, int i, int j);

/// t = 1 in every coefficient.
OnsagerRelation specialize_q1(const OnsagerRelation& rel);

/// Sets every rho symbol to zero (q-Serre degeneration).
NCPoly serre_degeneration(const OnsagerRelation& rel);

/// Validates bar-invariance of the whole gamma table; throws std::logic_error.
void validate_gamma_table();

} // namespace qons
