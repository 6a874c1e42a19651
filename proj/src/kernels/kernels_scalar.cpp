#include "frontflow/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace frontflow::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double l1_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

double max_abs_scalar(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

double max_val_scalar(const double* a, std::size_t n) {
  double m = -HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

double min_val_scalar(const double* a, std::size_t n) {
  double m = HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, a[i]);
  return m;
}

void threshold_ge0_scalar(const double* u, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] >= 0.0 ? 1.0 : 0.0;
}

void linear_ramp_scalar(const double* u, double eps, double* out,
                        std::size_t n) {
  const double inv = 1.0 / (2.0 * eps);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (u[i] + eps) * inv;
    out[i] = std::clamp(r, 0.0, 1.0);
  }
}

void transport_update_scalar(double* out, const double* u, const double* c,
                             const double* g, double dt, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] + dt * (c[i] * g[i]);
}

void upwind_quad_accum_scalar(double* acc, const double* um, const double* uc,
                              const double* up, const double* c, double inv_h,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dm = (uc[i] - um[i]) * inv_h;
    const double dp = (up[i] - uc[i]) * inv_h;
    double a, b;
    if (c[i] >= 0.0) {
      a = std::min(dm, 0.0);
      b = std::max(dp, 0.0);
    } else {
      a = std::max(dm, 0.0);
      b = std::min(dp, 0.0);
    }
    acc[i] += a * a + b * b;
  }
}

void laplacian_accum_scalar(double* acc, const double* um, const double* uc,
                            const double* up, double inv_h2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = um[i] + up[i] - 2.0 * uc[i];
    acc[i] += t * inv_h2;
  }
}

void reaction_update_scalar(double* out, const double* v, const double* lap,
                            const double* gpv, const double* gmv,
                            const double* chi, double dt, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double src = gpv[i] * chi[i] + gmv[i] * (1.0 - chi[i]);
    out[i] = v[i] + dt * (lap[i] + src);
  }
}

void relax_mix_scalar(double* out, const double* a, const double* b,
                      double theta, std::size_t n) {
  const double one_minus = 1.0 - theta;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = one_minus * a[i] + theta * b[i];
    out[i] = std::clamp(r, 0.0, 1.0);
  }
}

void elementwise_sqrt_scalar(double* out, const double* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(a[i]);
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      "scalar",
      dot_scalar,
      sum_scalar,
      l1_diff_scalar,
      max_abs_scalar,
      max_val_scalar,
      min_val_scalar,
      threshold_ge0_scalar,
      linear_ramp_scalar,
      transport_update_scalar,
      upwind_quad_accum_scalar,
      laplacian_accum_scalar,
      reaction_update_scalar,
      relax_mix_scalar,
      elementwise_sqrt_scalar,
  };
  return table;
}

}  // namespace frontflow::kernels
