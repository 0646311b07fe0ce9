#include "cusp/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CUSP_X86 1
#endif

namespace cusp::kernels {

namespace {
std::atomic<int> g_mode{-1};  // -1 undecided, 0 scalar, 1 avx2

int mode() {
  int m = g_mode.load(std::memory_order_relaxed);
  if (m >= 0) return m;
  const char* env = std::getenv("CUSP_SCALAR");
  m = (env && env[0] == '1') ? 0 : (simd_available() ? 1 : 0);
  g_mode.store(m, std::memory_order_relaxed);
  return m;
}
}  // namespace

bool simd_available() {
#ifdef CUSP_X86
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void force_scalar(bool on) { g_mode.store(on ? 0 : (simd_available() ? 1 : 0)); }

std::int32_t fourpoint_row_scalar(const std::int32_t* dx, const std::int32_t* dy, const std::int32_t* dz,
                                  std::size_t n, std::int32_t dxy, std::int32_t dxz, std::int32_t dyz) {
  std::int32_t best = 0;
  for (std::size_t w = 0; w < n; ++w) {
    std::int32_t s1 = dxy + dz[w], s2 = dxz + dy[w], s3 = dyz + dx[w];
    std::int32_t hi = std::max({s1, s2, s3}), lo = std::min({s1, s2, s3});
    best = std::max(best, 2 * hi + lo - (s1 + s2 + s3));
  }
  return best;
}

void minplus_row_scalar(double* row, const double* krow, double rk, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) row[j] = std::min(row[j], rk + krow[j]);
}

void gromov_row_scalar(const std::int32_t* da, const std::int32_t* db, std::int32_t dab, std::int32_t* out,
                       std::size_t n) {
  for (std::size_t w = 0; w < n; ++w) out[w] = da[w] + db[w] - dab;
}

#ifdef CUSP_X86
__attribute__((target("avx2"))) std::int32_t fourpoint_row_avx2(const std::int32_t* dx, const std::int32_t* dy,
                                                                 const std::int32_t* dz, std::size_t n,
                                                                 std::int32_t dxy, std::int32_t dxz,
                                                                 std::int32_t dyz) {
  const __m256i vxy = _mm256_set1_epi32(dxy), vxz = _mm256_set1_epi32(dxz), vyz = _mm256_set1_epi32(dyz);
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 8 <= n; w += 8) {
    __m256i s1 = _mm256_add_epi32(vxy, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dz + w)));
    __m256i s2 = _mm256_add_epi32(vxz, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dy + w)));
    __m256i s3 = _mm256_add_epi32(vyz, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dx + w)));
    __m256i hi = _mm256_max_epi32(_mm256_max_epi32(s1, s2), s3);
    __m256i lo = _mm256_min_epi32(_mm256_min_epi32(s1, s2), s3);
    __m256i sum = _mm256_add_epi32(_mm256_add_epi32(s1, s2), s3);
    __m256i v = _mm256_sub_epi32(_mm256_add_epi32(_mm256_add_epi32(hi, hi), lo), sum);
    acc = _mm256_max_epi32(acc, v);
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int32_t best = *std::max_element(lanes, lanes + 8);
  return std::max(best, fourpoint_row_scalar(dx + w, dy + w, dz + w, n - w, dxy, dxz, dyz));
}

__attribute__((target("avx2"))) void minplus_row_avx2(double* row, const double* krow, double rk, std::size_t n) {
  const __m256d vk = _mm256_set1_pd(rk);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d r = _mm256_loadu_pd(row + j);
    __m256d c = _mm256_add_pd(vk, _mm256_loadu_pd(krow + j));
    // min(r, c) picks r on ties, same as std::min(r, c)
    _mm256_storeu_pd(row + j, _mm256_blendv_pd(r, c, _mm256_cmp_pd(c, r, _CMP_LT_OQ)));
  }
  minplus_row_scalar(row + j, krow + j, rk, n - j);
}

__attribute__((target("avx2"))) void gromov_row_avx2(const std::int32_t* da, const std::int32_t* db,
                                                     std::int32_t dab, std::int32_t* out, std::size_t n) {
  const __m256i vab = _mm256_set1_epi32(dab);
  std::size_t w = 0;
  for (; w + 8 <= n; w += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(da + w));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(db + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_sub_epi32(_mm256_add_epi32(a, b), vab));
  }
  gromov_row_scalar(da + w, db + w, dab, out + w, n - w);
}
#else
std::int32_t fourpoint_row_avx2(const std::int32_t* dx, const std::int32_t* dy, const std::int32_t* dz, std::size_t n,
                                std::int32_t dxy, std::int32_t dxz, std::int32_t dyz) {
  return fourpoint_row_scalar(dx, dy, dz, n, dxy, dxz, dyz);
}
void minplus_row_avx2(double* row, const double* krow, double rk, std::size_t n) {
  minplus_row_scalar(row, krow, rk, n);
}
void gromov_row_avx2(const std::int32_t* da, const std::int32_t* db, std::int32_t dab, std::int32_t* out,
                     std::size_t n) {
  gromov_row_scalar(da, db, dab, out, n);
}
#endif

std::int32_t fourpoint_row(const std::int32_t* dx, const std::int32_t* dy, const std::int32_t* dz, std::size_t n,
                           std::int32_t dxy, std::int32_t dxz, std::int32_t dyz) {
  return mode() ? fourpoint_row_avx2(dx, dy, dz, n, dxy, dxz, dyz)
                : fourpoint_row_scalar(dx, dy, dz, n, dxy, dxz, dyz);
}

void minplus_row(double* row, const double* krow, double rk, std::size_t n) {
  mode() ? minplus_row_avx2(row, krow, rk, n) : minplus_row_scalar(row, krow, rk, n);
}

void gromov_row(const std::int32_t* da, const std::int32_t* db, std::int32_t dab, std::int32_t* out, std::size_t n) {
  mode() ? gromov_row_avx2(da, db, dab, out, n) : gromov_row_scalar(da, db, dab, out, n);
}

}  // namespace cusp::kernels
