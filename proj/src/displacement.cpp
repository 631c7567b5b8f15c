#include "vsckin/displacement.hpp"

#include <cmath>

#include "vsckin/error.hpp"

namespace vsckin {

double associated_laguerre(int n, int alpha, double x) {
  if (n < 0) throw ValidationError("associated_laguerre: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double displacement_matrix_element(int m_out, int m_in, double lambda) {
  if (m_out < 0 || m_in < 0) {
    throw ValidationError("displacement_matrix_element: occupations must be >= 0");
  }
  if (m_out < m_in) return displacement_matrix_element(m_in, m_out, -lambda);

  const int shift = m_out - m_in;
  // sqrt(m_in!/m_out!) as a running product, no factorials.
  double norm = 1.0;
  for (int k = m_in + 1; k <= m_out; ++k) norm /= std::sqrt(static_cast<double>(k));
  const double x = lambda * lambda;
  double power = 1.0;
  for (int k = 0; k < shift; ++k) power *= lambda;
  return norm * std::exp(-0.5 * x) * power * associated_laguerre(m_in, shift, x);
}

}  // namespace vsckin
