#include "pachner/gf2_kernels.hpp"

#include <atomic>
#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PACHNER_HAVE_AVX2_PATH 1
#elif defined(__aarch64__)
#include <arm_neon.h>
#define PACHNER_HAVE_NEON_PATH 1
#endif

namespace pachner::gf2 {
namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t popcount_scalar(const std::uint64_t* row, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += static_cast<std::size_t>(std::popcount(row[i]));
  return n;
}

long first_set_scalar(const std::uint64_t* row, std::size_t words, std::size_t from) {
  for (std::size_t i = from; i < words; ++i) {
    if (row[i]) return static_cast<long>(i * 64 + std::countr_zero(row[i]));
  }
  return -1;
}

#if defined(PACHNER_HAVE_AVX2_PATH)

__attribute__((target("avx2"))) void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                   std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

// Nibble lookup popcount, summed with sad against zero.
__attribute__((target("avx2"))) std::size_t popcount_avx2(const std::uint64_t* row,
                                                          std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1,
                                       2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t n = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < words; ++i) n += static_cast<std::size_t>(std::popcount(row[i]));
  return n;
}

__attribute__((target("avx2"))) long first_set_avx2(const std::uint64_t* row, std::size_t words,
                                                    std::size_t from) {
  std::size_t i = from;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    if (!_mm256_testz_si256(v, v)) break;
  }
  for (; i < words; ++i) {
    if (row[i]) return static_cast<long>(i * 64 + std::countr_zero(row[i]));
  }
  return -1;
}

#elif defined(PACHNER_HAVE_NEON_PATH)

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t popcount_neon(const std::uint64_t* row, std::size_t words) {
  std::size_t n = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint8x16_t c = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(row + i)));
    n += vaddvq_u8(c);
  }
  for (; i < words; ++i) n += static_cast<std::size_t>(std::popcount(row[i]));
  return n;
}

long first_set_neon(const std::uint64_t* row, std::size_t words, std::size_t from) {
  return first_set_scalar(row, words, from);
}

#endif

const Kernels kScalar{"scalar", xor_into_scalar, popcount_scalar, first_set_scalar};
#if defined(PACHNER_HAVE_AVX2_PATH)
const Kernels kVector{"avx2", xor_into_avx2, popcount_avx2, first_set_avx2};
#elif defined(PACHNER_HAVE_NEON_PATH)
const Kernels kVector{"neon", xor_into_neon, popcount_neon, first_set_neon};
#endif

std::atomic<bool> g_force_scalar{false};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* vector_kernels() {
#if defined(PACHNER_HAVE_AVX2_PATH)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &kVector : nullptr;
#elif defined(PACHNER_HAVE_NEON_PATH)
  return &kVector;
#else
  return nullptr;
#endif
}

const Kernels& active_kernels() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return kScalar;
  const Kernels* v = vector_kernels();
  return v ? *v : kScalar;
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace pachner::gf2
