#include "simplexkit/kernels.hpp"

#include "kernels_detail.hpp"

#include <cstdlib>
#include <string_view>

namespace simplexkit::kernels {

namespace {

constexpr KernelTable kScalar{
    "scalar",
    detail::squared_distance_scalar,
    detail::dot_scalar,
    detail::axpy_scalar,
    detail::row_squared_distances_scalar,
};

#if defined(SIMPLEXKIT_HAVE_AVX2)
constexpr KernelTable kAvx2{
    "avx2",
    detail::squared_distance_avx2,
    detail::dot_avx2,
    detail::axpy_avx2,
    detail::row_squared_distances_avx2,
};

bool cpu_has_avx2() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select() noexcept {
    if (const char* forced = std::getenv("SIMPLEXKIT_KERNELS");
        forced != nullptr && std::string_view(forced) == "scalar")
        return kScalar;
    if (const KernelTable* simd = avx2_table()) return *simd;
    return kScalar;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(SIMPLEXKIT_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable& table = select();
    return table;
}

}  // namespace simplexkit::kernels
