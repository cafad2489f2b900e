#pragma once
// Data-parallel inner loops shared by the geometry modules.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant compiled in its own translation unit. The active table is chosen
// once at first use from the running CPU; SIMPLEXKIT_KERNELS=scalar forces
// the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace simplexkit::kernels {

struct KernelTable {
    std::string_view name;

    // sum_k (a_k - b_k)^2
    double (*squared_distance)(const double* a, const double* b, std::size_t n) noexcept;
    // sum_k a_k b_k
    double (*dot)(const double* a, const double* b, std::size_t n) noexcept;
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n) noexcept;
    // out[r] = |row_r - center|^2 for `rows` rows of a row-major rows x n buffer
    void (*row_squared_distances)(const double* rows, std::size_t count, std::size_t n,
                                  const double* center, double* out) noexcept;
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the AVX2 variant was not built or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table() noexcept;

/// Table selected for this process.
const KernelTable& active() noexcept;

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    return active().squared_distance(a.data(), b.data(), a.size());
}

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return active().dot(a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    active().axpy(alpha, x.data(), y.data(), x.size());
}

inline void row_squared_distances(std::span<const double> rows, std::size_t n,
                                  std::span<const double> center, std::span<double> out) noexcept {
    active().row_squared_distances(rows.data(), out.size(), n, center.data(), out.data());
}

}  // namespace simplexkit::kernels
