#pragma once

#include <vector>

namespace fpqaoa {

// Trainable Fourier coefficients; q = 1 is the two-parameter sine-cosine
// encoding with scalars (u, v).
struct FourierParams {
  std::vector<double> u;  // gamma-side
  std::vector<double> v;  // beta-side

  int q() const { return static_cast<int>(u.size()); }
};

// Depth-p angle schedule (gamma_1..gamma_p, beta_1..beta_p).
struct AngleSchedule {
  std::vector<double> gamma;
  std::vector<double> beta;

  int p() const { return static_cast<int>(gamma.size()); }
};

// Fourier decoding, for i = 1..p:
//   gamma_i = sum_{k=1..q} u_k sin[(k - 1/2)(i - 1/2) pi / p]
//   beta_i  = sum_{k=1..q} v_k cos[(k - 1/2)(i - 1/2) pi / p]
AngleSchedule decode(const FourierParams& params, int p);

// Sine-cosine special case, p = n:
//   gamma_i = u sin[(i - 1/2) pi / (2n)],  beta_i = v cos[(i - 1/2) pi / (2n)]
// Implemented as decode with q = 1, so the two agree bit for bit.
AngleSchedule decode_sincos(double u, double v, int n);

}  // namespace fpqaoa
