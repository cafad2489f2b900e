#pragma once

#include <cstddef>

namespace simplexkit::kernels::detail {

double squared_distance_scalar(const double* a, const double* b, std::size_t n) noexcept;
double dot_scalar(const double* a, const double* b, std::size_t n) noexcept;
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) noexcept;
void row_squared_distances_scalar(const double* rows, std::size_t count, std::size_t n,
                                  const double* center, double* out) noexcept;

#if defined(SIMPLEXKIT_HAVE_AVX2)
// Defined in kernels_avx2.cpp, which is the only file built with -mavx2 -mfma.
double squared_distance_avx2(const double* a, const double* b, std::size_t n) noexcept;
double dot_avx2(const double* a, const double* b, std::size_t n) noexcept;
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) noexcept;
void row_squared_distances_avx2(const double* rows, std::size_t count, std::size_t n,
                                const double* center, double* out) noexcept;
#endif

}  // namespace simplexkit::kernels::detail
