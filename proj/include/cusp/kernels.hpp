#pragma once

#include <cstddef>
#include <cstdint>

namespace cusp::kernels {

// max over w of 2*max(s) + min(s) - sum(s) where
// s1 = dxy + dz[w], s2 = dxz + dy[w], s3 = dyz + dx[w].
// This is twice the largest-minus-middle four-point gap over w.
std::int32_t fourpoint_row_scalar(const std::int32_t* dx, const std::int32_t* dy, const std::int32_t* dz,
                                  std::size_t n, std::int32_t dxy, std::int32_t dxz, std::int32_t dyz);
std::int32_t fourpoint_row_avx2(const std::int32_t* dx, const std::int32_t* dy, const std::int32_t* dz,
                                std::size_t n, std::int32_t dxy, std::int32_t dxz, std::int32_t dyz);
std::int32_t fourpoint_row(const std::int32_t* dx, const std::int32_t* dy, const std::int32_t* dz, std::size_t n,
                           std::int32_t dxy, std::int32_t dxz, std::int32_t dyz);

// row[j] = min(row[j], rk + krow[j])
void minplus_row_scalar(double* row, const double* krow, double rk, std::size_t n);
void minplus_row_avx2(double* row, const double* krow, double rk, std::size_t n);
void minplus_row(double* row, const double* krow, double rk, std::size_t n);

// out[w] = da[w] + db[w] - dab  (twice the Gromov product of a, b at w)
void gromov_row_scalar(const std::int32_t* da, const std::int32_t* db, std::int32_t dab, std::int32_t* out,
                       std::size_t n);
void gromov_row_avx2(const std::int32_t* da, const std::int32_t* db, std::int32_t dab, std::int32_t* out,
                     std::size_t n);
void gromov_row(const std::int32_t* da, const std::int32_t* db, std::int32_t dab, std::int32_t* out, std::size_t n);

bool simd_available();
// Force the scalar path regardless of CPU support (also honoured via CUSP_SCALAR=1).
void force_scalar(bool on);

}  // namespace cusp::kernels
