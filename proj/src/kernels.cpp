#include "aquamass/kernels.hpp"

#include <atomic>
#include <bit>

namespace aquamass::kern {

namespace {

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::uint64_t or_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] | b[i]);
    return total;
}

void and3_scalar(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                 std::uint64_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & b[i] & c[i];
}

void or3_scalar(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                std::uint64_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i] | c[i];
}

constexpr Kernels kScalar = {
    "scalar", popcount_scalar, and_popcount_scalar, or_popcount_scalar, and3_scalar, or3_scalar,
};

std::atomic<bool> g_force_scalar{false};

}  // namespace

const Kernels& scalar_kernels() {
    return kScalar;
}

// Defined in kernels_simd.cpp; returns nullptr when the CPU lacks support.
const Kernels* simd_kernels();

const Kernels& active_kernels() {
    if (g_force_scalar.load(std::memory_order_relaxed)) return kScalar;
    static const Kernels* selected = [] {
        const Kernels* simd = simd_kernels();
        return simd ? simd : &kScalar;
    }();
    return *selected;
}

void force_scalar_kernels(bool on) {
    g_force_scalar.store(on, std::memory_order_relaxed);
}

}  // namespace aquamass::kern
