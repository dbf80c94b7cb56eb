#include "logtev/enumerate.hpp"

namespace logtev {

namespace {

void partitions_rec(long remaining, long max_next, int budget,
                    std::vector<long>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{current});
    return;
  }
  if (budget == 0) return;
  for (long part = std::min(remaining, max_next); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, budget - 1, current, out);
    current.pop_back();
  }
}

int min_parts(long sum, long max_part) {
  if (sum <= 0) return 0;
  return static_cast<int>((sum + max_part - 1) / max_part);
}

/// Cartesian product over partition slots with a shared part-count
/// budget.
void product_rec(const std::vector<long>& sums, size_t slot, long max_part,
                 int budget, std::vector<Partition>& chosen,
                 const std::function<void(const std::vector<Partition>&)>& emit) {
  if (slot == sums.size()) {
    emit(chosen);
    return;
  }
  int reserved = 0;
  for (size_t j = slot + 1; j < sums.size(); ++j) {
    reserved += min_parts(sums[j], max_part);
  }
  for (auto& p : partitions_of(sums[slot], max_part, budget - reserved)) {
    chosen.push_back(p);
    product_rec(sums, slot + 1, max_part, budget - p.size(), chosen, emit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long sum, long max_part, int max_parts) {
  std::vector<Partition> out;
  if (sum < 0 || max_parts < 0) return out;
  std::vector<long> current;
  partitions_rec(sum, max_part, max_parts, current, out);
  return out;
}

void enumerate_xrsa(const XrsaSweepBounds& bounds,
                    const std::function<void(const GammaXrsa&)>& emit) {
  if (bounds.max_part < 1) return;
  for (int r = 1; r <= bounds.max_r; ++r) {
    for (int s = 1; s <= bounds.max_s; ++s) {
      for (long a = 0; a <= bounds.max_a; ++a) {
        for (long b = 0;; ++b) {
          if (b > 0 && (r + 1) * min_parts(b, bounds.max_part) > bounds.max_m)
            break;
          for (long c = a * b;; ++c) {
            std::vector<long> sums;
            sums.push_back(c - a * b);
            for (int j = 1; j <= r + 1; ++j) sums.push_back(b);
            for (int j = r + 2; j <= r + s + 1; ++j) sums.push_back(c);
            int floor_parts = 0;
            for (long sum : sums) floor_parts += min_parts(sum, bounds.max_part);
            if (floor_parts > bounds.max_m) {
              if (c == a * b) goto next_b;  // growing c cannot help
              break;
            }
            {
              std::vector<Partition> chosen;
              product_rec(sums, 0, bounds.max_part, bounds.max_m, chosen,
                          [&](const std::vector<Partition>& mu) {
                            int m = 0;
                            for (const auto& p : mu) m += p.size();
                            if (m % (r + s) != 0) return;
                            GammaXrsa g;
                            g.r = r;
                            g.s = s;
                            g.a = a;
                            g.b = b;
                            g.c = c;
                            g.mu = mu;
                            emit(g);
                          });
            }
          }
        next_b:;
        }
      }
    }
  }
}

void enumerate_blp2(const Blp2SweepBounds& bounds,
                    const std::function<void(const GammaBlp2&)>& emit) {
  if (bounds.max_part < 1) return;
  const long cap = bounds.max_part * bounds.max_m;
  for (long s1 = 0; s1 <= cap; ++s1) {
    for (long s2 = 0; s2 <= cap; ++s2) {
      for (long s3 = 0; s3 <= cap; ++s3) {
        const long d = s1 + s2 + s3;
        if (d < 1) continue;
        // |mu_4| = d - |mu_1|, |mu_5| = d - |mu_2|.
        std::vector<long> sums = {s1, s2, s3, s2 + s3, s1 + s3};
        int floor_parts = 0;
        for (long sum : sums) floor_parts += min_parts(sum, bounds.max_part);
        if (floor_parts > bounds.max_m) continue;
        std::vector<Partition> chosen;
        product_rec(sums, 0, bounds.max_part, bounds.max_m, chosen,
                    [&](const std::vector<Partition>& mu) {
                      int m = 0;
                      for (const auto& p : mu) m += p.size();
                      if (m % 2 != 0) return;
                      GammaBlp2 g;
                      g.d = d;
                      g.mu = mu;
                      emit(g);
                    });
      }
    }
  }
}

}  // namespace logtev
