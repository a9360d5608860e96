#ifndef SIGMA_SERIES_ORACLE_HPP
#define SIGMA_SERIES_ORACLE_HPP

#include "sigma/coeff_table.hpp"
#include "sigma/truncated_series.hpp"

namespace sigma {

// The sigma series assembled from a coefficient table: the z^(4i+6j+1)
// coefficient is a(i,j) * 2^(j-i) / (4i+6j+1)! * g2^i g3^j. Requires the
// table to cover every index with 4i+6j+1 < order.
TruncatedSeries sigma_from_table(const CoeffTable& table, long order);

// First annihilating operator: 4 g2 d/dg2 + 6 g3 d/dg3 - z d/dz + 1.
// Kills every monomial of the sigma shape term by term, so any truncation of
// sigma maps to the exact zero-through-precision series.
TruncatedSeries apply_Q0(const TruncatedSeries& f);

// Second annihilating operator:
// 6 g3 d/dg2 + (1/3) g2^2 d/dg3 - (1/2) d^2/dz^2 - (1/24) g2 z^2.
// The double z-derivative costs two orders of precision; inputs must carry
// order >= 3 (InsufficientPrecision otherwise).
TruncatedSeries apply_Q2(const TruncatedSeries& f);

// Laurent expansion of the Weierstrass P-function about 0:
// P = z^-2 + sum_{k>=2} c_k z^(2k-2), with c_2 = g2/20 and c_3 = g3/28
// forced by the cubic identity and the remaining c_k from the quadratic
// recursion c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}.
TruncatedSeries pe_laurent(long order);

// Independent reconstruction of sigma from the P-function expansion:
// sigma = z * exp(-sum_{k>=2} c_k z^(2k) / ((2k-1)(2k))), the unique
// solution of (log sigma)'' = -P with sigma(0) = 0, sigma'(0) = 1.
// Shares nothing with sigma_from_table beyond polynomial arithmetic.
TruncatedSeries sigma_from_pe(long order);

// P'^2 - 4 P^3 + g2 P + g3, which must vanish identically through its
// tracked precision (order - 4 for input precision `order`).
TruncatedSeries weierstrass_residual(long order);

}  // namespace sigma

#endif  // SIGMA_SERIES_ORACLE_HPP
