#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pachner::gf2 {

/// Inner loops of bit-packed GF2 elimination. Every variant must agree
/// bit-for-bit with the scalar reference.
struct Kernels {
  std::string_view name;
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  std::size_t (*popcount)(const std::uint64_t* row, std::size_t words);
  /// Index of the lowest set bit at or after word `from`, or -1.
  long (*first_set)(const std::uint64_t* row, std::size_t words, std::size_t from);
};

const Kernels& scalar_kernels();

/// AVX2 (x86-64) or NEON (aarch64) variant when the running CPU supports it.
const Kernels* vector_kernels();

/// The variant used by BitMatrix: vector_kernels() when present.
const Kernels& active_kernels();

/// Pins active_kernels() to the scalar reference (tests and benchmarking).
void force_scalar(bool on);

}  // namespace pachner::gf2
