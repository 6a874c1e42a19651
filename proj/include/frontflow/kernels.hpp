#pragma once

#include <cstddef>

// Low-level array kernels behind the field operations. Every kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant selected
// once at startup. Elementwise kernels are bitwise-identical between the two
// paths (no FMA contraction); reductions may differ by accumulation order and
// are equivalence-tested to tolerance instead.
//
// Set FRONTFLOW_SIMD=scalar in the environment to force the reference path.

namespace frontflow::kernels {

struct Ops {
  const char* name;

  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  double (*l1_diff)(const double* a, const double* b, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  double (*max_val)(const double* a, std::size_t n);
  double (*min_val)(const double* a, std::size_t n);

  // out[i] = u[i] >= 0 ? 1 : 0
  void (*threshold_ge0)(const double* u, double* out, std::size_t n);
  // out[i] = clamp((u[i] + eps) / (2 eps), 0, 1); eps > 0
  void (*linear_ramp)(const double* u, double eps, double* out, std::size_t n);
  // out[i] = u[i] + dt * c[i] * g[i]
  void (*transport_update)(double* out, const double* u, const double* c,
                           const double* g, double dt, std::size_t n);
  // acc[i] += upwind-selected one-sided slope magnitude squared:
  //   dm = (uc[i]-um[i])*inv_h, dp = (up[i]-uc[i])*inv_h
  //   c[i] >= 0:  min(dm,0)^2 + max(dp,0)^2   (expanding front)
  //   c[i] <  0:  max(dm,0)^2 + min(dp,0)^2
  void (*upwind_quad_accum)(double* acc, const double* um, const double* uc,
                            const double* up, const double* c, double inv_h,
                            std::size_t n);
  // acc[i] += (um[i] - 2 uc[i] + up[i]) * inv_h2
  void (*laplacian_accum)(double* acc, const double* um, const double* uc,
                          const double* up, double inv_h2, std::size_t n);
  // out[i] = v[i] + dt * (lap[i] + gpv[i]*chi[i] + gmv[i]*(1 - chi[i]))
  void (*reaction_update)(double* out, const double* v, const double* lap,
                          const double* gpv, const double* gmv,
                          const double* chi, double dt, std::size_t n);
  // out[i] = clamp((1-theta)*a[i] + theta*b[i], 0, 1)
  void (*relax_mix)(double* out, const double* a, const double* b,
                    double theta, std::size_t n);
  // out[i] = sqrt(a[i])
  void (*elementwise_sqrt)(double* out, const double* a, std::size_t n);
};

// Kernel table selected at startup (CPU feature probe + FRONTFLOW_SIMD).
const Ops& ops();

// Reference implementations, always available.
const Ops& scalar_ops();

// AVX2 table, or nullptr when not compiled in / not supported by the CPU.
const Ops* avx2_ops();

}  // namespace frontflow::kernels
