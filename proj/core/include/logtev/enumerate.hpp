#ifndef LOGTEV_ENUMERATE_HPP
#define LOGTEV_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "logtev/gamma.hpp"

namespace logtev {

/// All partitions with the given sum, parts <= max_part, and at most
/// max_parts parts, in canonical non-increasing order.
std::vector<Partition> partitions_of(long sum, long max_part, int max_parts);

struct XrsaSweepBounds {
  int max_r = 0;
  int max_s = 0;
  long max_a = 0;
  int max_m = 0;
  long max_part = 0;
};

struct Blp2SweepBounds {
  int max_m = 0;
  long max_part = 0;
};

/// Enumerates every valid GammaXrsa with r <= max_r, s <= max_s,
/// a <= max_a, total part count <= max_m, and parts <= max_part, in
/// deterministic lexicographic order. Each emitted datum passes
/// validate_xrsa. Partitions are produced in canonical non-increasing
/// order.
void enumerate_xrsa(const XrsaSweepBounds& bounds,
                    const std::function<void(const GammaXrsa&)>& emit);

/// Same for GammaBlp2.
void enumerate_blp2(const Blp2SweepBounds& bounds,
                    const std::function<void(const GammaBlp2&)>& emit);

}  // namespace logtev

#endif
