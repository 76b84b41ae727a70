#include "fpqaoa/encoding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpqaoa {

AngleSchedule decode(const FourierParams& params, int p) {
  if (p < 1) throw std::invalid_argument("decode: depth p must be >= 1");
  if (params.q() < 1 || params.u.size() != params.v.size())
    throw std::invalid_argument("decode: u and v must share a length q >= 1");

  AngleSchedule s;
  s.gamma.resize(p);
  s.beta.resize(p);
  for (int i = 1; i <= p; ++i) {
    double g = 0.0, b = 0.0;
    for (int k = 1; k <= params.q(); ++k) {
      const double arg = (k - 0.5) * (i - 0.5) * std::numbers::pi / p;
      g += params.u[k - 1] * std::sin(arg);
      b += params.v[k - 1] * std::cos(arg);
    }
    s.gamma[i - 1] = g;
    s.beta[i - 1] = b;
  }
  return s;
}

AngleSchedule decode_sincos(double u, double v, int n) {
  return decode(FourierParams{{u}, {v}}, n);
}

}  // namespace fpqaoa
