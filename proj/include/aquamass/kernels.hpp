#pragma once

#include <cstddef>
#include <cstdint>

namespace aquamass::kern {

/// Word-level kernels for bit-packed masks. Arguments are arrays of 64-bit
/// words, `n` counts words. The scalar implementations are the reference;
/// any wider backend must produce bit-identical results and is selected
/// once per process from CPU capabilities.
struct Kernels {
    const char* name;
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    std::uint64_t (*or_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*and3)(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                 std::uint64_t* out, std::size_t n);
    void (*or3)(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                std::uint64_t* out, std::size_t n);
};

/// Portable reference kernels.
const Kernels& scalar_kernels();

/// Best backend available on this CPU (AVX2 on x86-64, NEON on aarch64,
/// otherwise the scalar reference). Honors force_scalar_kernels().
const Kernels& active_kernels();

/// Test hook: when true, active_kernels() returns the scalar reference.
void force_scalar_kernels(bool on);

}  // namespace aquamass::kern
