#include "vsckin/expm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "vsckin/error.hpp"

namespace vsckin {

Matrix expm_pade(const Matrix& a) {
  if (!a.square()) throw ValidationError("expm_pade: matrix must be square");
  const std::size_t n = a.rows();
  for (double v : a.data()) {
    if (!std::isfinite(v)) throw NumericalError("expm_pade: non-finite input");
  }

  // Higham (2005) degree-13 coefficients and the matching norm bound.
  static constexpr std::array<double, 14> b{64764752532480000.0,
                                            32382376266240000.0,
                                            7771770303897600.0,
                                            1187353796428800.0,
                                            129060195264000.0,
                                            10559470521600.0,
                                            670442572800.0,
                                            33522128640.0,
                                            1323241920.0,
                                            40840800.0,
                                            960960.0,
                                            16380.0,
                                            182.0,
                                            1.0};
  constexpr double theta13 = 5.371920351148152;

  const double norm = a.norm1();
  int squarings = 0;
  if (norm > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
  const Matrix x = scaled(a, std::ldexp(1.0, -squarings));

  const Matrix id = Matrix::identity(n);
  const Matrix x2 = multiply(x, x);
  const Matrix x4 = multiply(x2, x2);
  const Matrix x6 = multiply(x4, x2);

  Matrix u_inner = scaled(x6, b[13]);
  add_scaled(u_inner, x4, b[11]);
  add_scaled(u_inner, x2, b[9]);
  Matrix u_outer = multiply(x6, u_inner);
  add_scaled(u_outer, x6, b[7]);
  add_scaled(u_outer, x4, b[5]);
  add_scaled(u_outer, x2, b[3]);
  add_scaled(u_outer, id, b[1]);
  const Matrix u = multiply(x, u_outer);

  Matrix v_inner = scaled(x6, b[12]);
  add_scaled(v_inner, x4, b[10]);
  add_scaled(v_inner, x2, b[8]);
  Matrix v = multiply(x6, v_inner);
  add_scaled(v, x6, b[6]);
  add_scaled(v, x4, b[4]);
  add_scaled(v, x2, b[2]);
  add_scaled(v, id, b[0]);

  Matrix numerator = v;
  add_scaled(numerator, u, 1.0);
  Matrix denominator = v;
  add_scaled(denominator, u, -1.0);
  Matrix result = solve(std::move(denominator), std::move(numerator));
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

Matrix expm_uniformized(const Matrix& generator, double t) {
  if (!generator.square()) throw ValidationError("expm_uniformized: matrix must be square");
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("expm_uniformized: bad t");
  const std::size_t n = generator.rows();
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = generator(i, j);
      if (!std::isfinite(v)) throw NumericalError("expm_uniformized: non-finite input");
      if (i != j && v < 0.0) throw NumericalError("expm_uniformized: negative off-diagonal rate");
    }
    q = std::max(q, -generator(i, i));
  }
  if (q == 0.0 || t == 0.0) return Matrix::identity(n);

  // Keep q*tau <= 1/2 so the series needs few terms.
  int squarings = 0;
  double tau = t;
  while (q * tau > 0.5) {
    tau *= 0.5;
    ++squarings;
  }
  Matrix p = scaled(generator, 1.0 / q);
  for (std::size_t i = 0; i < n; ++i) p(i, i) += 1.0;
  for (double& v : p.data()) v = std::max(v, 0.0);  // diagonal roundoff at q == |K_ii|

  const double x = q * tau;
  // Terms beyond this order are below 1e-20 relative for x <= 1/2.
  constexpr int kOrder = 18;
  // Horner: S = I + x/1 P (I + x/2 P (I + ... (I + x/kOrder P))).
  Matrix sum = Matrix::identity(n);
  for (int k = kOrder; k >= 1; --k) {
    Matrix next = multiply(p, sum);
    Matrix acc = Matrix::identity(n);
    add_scaled(acc, next, x / k);
    sum = std::move(acc);
  }
  Matrix result = scaled(sum, std::exp(-x));
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

}  // namespace vsckin
