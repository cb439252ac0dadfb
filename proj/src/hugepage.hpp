#pragma once

#include <cstddef>
#include <cstdint>

#ifdef __linux__
#include <sys/mman.h>
#endif

namespace slslab {

// Best-effort transparent-hugepage promotion for a large hot buffer. The
// solver loops make random accesses over several MB; 4K pages make every
// such access a likely TLB walk. No-op off Linux or on failure.
inline void advise_huge(void* data, size_t bytes) {
#ifdef __linux__
  constexpr size_t kHuge = size_t{2} << 20;
  if (bytes < kHuge) return;
  const uintptr_t p = reinterpret_cast<uintptr_t>(data);
  const uintptr_t begin = (p + 4095) & ~uintptr_t{4095};
  const uintptr_t end = (p + bytes) & ~uintptr_t{4095};
  if (end <= begin) return;
#ifndef MADV_COLLAPSE
#define MADV_COLLAPSE 25
#endif
  if (madvise(reinterpret_cast<void*>(begin), end - begin, MADV_COLLAPSE) != 0)
    madvise(reinterpret_cast<void*>(begin), end - begin, MADV_HUGEPAGE);
#else
  (void)data;
  (void)bytes;
#endif
}

}  // namespace slslab
