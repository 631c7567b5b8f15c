#pragma once

#include "vsckin/matrix.hpp"

namespace vsckin {

/// exp(A) by scaling and squaring with a degree-13 Pade approximant.
Matrix expm_pade(const Matrix& a);

/// exp(K t) for a rate generator K (off-diagonals >= 0, columns summing to 0)
/// by uniformization: with q >= max |K_ii| and P = I + K/q >= 0,
/// exp(K tau) = exp(-q tau) sum_n (q tau)^n / n! P^n, evaluated for a small
/// tau = t / 2^s and squared s times. Every intermediate is entrywise
/// nonnegative, so small populations keep their relative accuracy.
Matrix expm_uniformized(const Matrix& generator, double t);

}  // namespace vsckin
