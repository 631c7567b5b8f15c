#pragma once

namespace vsckin {

/// Generalized Laguerre polynomial L_n^alpha(x) by three-term recurrence.
double associated_laguerre(int n, int alpha, double x);

/// <m_out| D(lambda) |m_in> for the displacement operator
/// D(lambda) = exp(lambda a^dagger - lambda a) with real lambda.
///
/// For m_out >= m_in this is
///   sqrt(m_in!/m_out!) exp(-lambda^2/2) lambda^(m_out-m_in) L_{m_in}^{m_out-m_in}(lambda^2);
/// for m_out < m_in the indices swap and lambda -> -lambda.
double displacement_matrix_element(int m_out, int m_in, double lambda);

}  // namespace vsckin
