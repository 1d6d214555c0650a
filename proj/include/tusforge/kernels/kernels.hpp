#pragma once

#include <cstddef>
#include <string_view>

namespace tusforge::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

/// Backend chosen for this process: the widest one the CPU supports, unless
/// the TUSFORGE_SIMD environment variable ({scalar, avx2, neon}) forces one.
/// Resolved once; stable for the lifetime of the process.
Backend active_backend();

/// Inner-product and squared-L2 reductions over n floats. These sit on the
/// hot path of every exact scan and HNSW traversal; all similarity scores in
/// the artifact funnel through them.
float dot(const float* a, const float* b, std::size_t n);
float l2_sq(const float* a, const float* b, std::size_t n);

/// Reference implementations. The dispatched variants above are
/// equivalence-tested against these.
namespace scalar {
float dot(const float* a, const float* b, std::size_t n);
float l2_sq(const float* a, const float* b, std::size_t n);
} // namespace scalar

#if defined(TUSFORGE_HAVE_AVX2)
namespace avx2 {
float dot(const float* a, const float* b, std::size_t n);
float l2_sq(const float* a, const float* b, std::size_t n);
} // namespace avx2
#endif

#if defined(TUSFORGE_HAVE_NEON)
namespace neon {
float dot(const float* a, const float* b, std::size_t n);
float l2_sq(const float* a, const float* b, std::size_t n);
} // namespace neon
#endif

} // namespace tusforge::kernels
