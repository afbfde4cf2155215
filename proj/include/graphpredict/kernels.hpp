#pragma once

// Dense vector kernels used by every numeric inner loop (skip-gram updates,
// FastRP propagation, KNN scoring, distance matrices, t-SNE).
//
// Each kernel has a portable scalar reference and, where the target supports
// it, an intrinsics variant. The variant is picked once at startup from the
// CPU feature bits; GRAPHPREDICT_SIMD=scalar in the environment (or
// force_backend) pins the reference path. Variants agree with the scalar
// reference to rounding, not bitwise: lane-wise accumulation reorders sums.

#include <cstddef>
#include <span>
#include <string_view>

namespace graphpredict::simd {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
// Throws std::invalid_argument if the CPU (or build) lacks the backend.
void force_backend(Backend b);

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(std::span<double> x, double alpha);

inline double squared_norm(std::span<const double> a) { return dot(a, a); }

// t-SNE forces on point i from all n points (coordinates in xs, ys), with
// q_j = 1 / (1 + |y_i - y_j|^2) and affinity row p:
//   attractive = sum_j exaggeration * p_j * q_j * (y_i - y_j)
//   repulsive  = sum_j q_j^2 * (y_i - y_j)
//   z          = sum_j q_j   (includes j == i, which contributes 1)
struct TsneTerms {
  double attract_x = 0.0;
  double attract_y = 0.0;
  double repulse_x = 0.0;
  double repulse_y = 0.0;
  double z = 0.0;
};

TsneTerms tsne_row(std::span<const double> p, std::span<const double> xs, std::span<const double> ys, double xi,
                   double yi, double exaggeration);

// Per-backend entry points, exposed for equivalence tests and benchmarks.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
TsneTerms tsne_row(const double* p, const double* xs, const double* ys, std::size_t n, double xi, double yi,
                   double exaggeration);
}  // namespace scalar

#if defined(GRAPHPREDICT_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
TsneTerms tsne_row(const double* p, const double* xs, const double* ys, std::size_t n, double xi, double yi,
                   double exaggeration);
}  // namespace avx2
#endif

#if defined(GRAPHPREDICT_HAVE_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
TsneTerms tsne_row(const double* p, const double* xs, const double* ys, std::size_t n, double xi, double yi,
                   double exaggeration);
}  // namespace neon
#endif

}  // namespace graphpredict::simd
