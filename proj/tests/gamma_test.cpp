#include <doctest.h>

#include <random>

#include "logtev/enumerate.hpp"
#include "logtev/gamma.hpp"

using namespace logtev;

namespace {

GammaXrsa x111_example() {
  GammaXrsa g;
  g.r = 1;
  g.s = 1;
  g.a = 1;
  g.b = 1;
  g.c = 2;
  g.mu.resize(4);
  g.mu[0].parts = {1};
  g.mu[1].parts = {1};
  g.mu[2].parts = {1};
  g.mu[3].parts = {2};
  return g;
}

GammaBlp2 theorem52_example() {
  GammaBlp2 g;
  g.d = 6;
  g.mu.resize(5);
  g.mu[0].parts = {1};
  g.mu[1].parts = {1};
  g.mu[2].parts = {1, 1, 1, 1};
  g.mu[3].parts = {5};
  g.mu[4].parts = {5};
  return g;
}

}  // namespace

TEST_CASE("validate_xrsa on the X_{1,1,1} example") {
  DerivedXrsa d = validate_xrsa(x111_example());
  CHECK(d.m_total == 4);
  CHECK(d.n == 3);
  CHECK(d.k0 == 1);
  CHECK(!d.degenerate);
  CHECK(d.m == std::vector<int>{1, 1, 1, 1});
  CHECK(d.offset == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("validate_xrsa error taxonomy") {
  GammaXrsa g = x111_example();

  SUBCASE("indivisible total part count") {
    g.mu[3].parts = {1, 1};
    CHECK_THROWS_AS(validate_xrsa(g), IndivisibleError);
  }
  SUBCASE("degree mismatch in the twisted summand") {
    g.mu[0].parts = {2};
    CHECK_THROWS_AS(validate_xrsa(g), DegreeMismatchError);
  }
  SUBCASE("degree mismatch in a base block") {
    g.mu[1].parts = {2};
    CHECK_THROWS_AS(validate_xrsa(g), DegreeMismatchError);
  }
  SUBCASE("c < ab") {
    g.a = 3;
    CHECK_THROWS_AS(validate_xrsa(g), NegativeTwistError);
  }
  SUBCASE("nonpositive part") {
    g.mu[2].parts = {0};
    CHECK_THROWS_AS(validate_xrsa(g), NonPositivePartError);
  }
  SUBCASE("wrong mu count") {
    g.mu.resize(3);
    CHECK_THROWS_AS(validate_xrsa(g), ValidationError);
  }
  SUBCASE("r < 1") {
    g.r = 0;
    CHECK_THROWS_AS(validate_xrsa(g), ValidationError);
  }
}

TEST_CASE("a=1, b=c, empty mu_0 is valid with m_0 = 0") {
  GammaXrsa g;
  g.r = 1;
  g.s = 1;
  g.a = 1;
  g.b = 2;
  g.c = 2;
  g.mu.resize(4);
  g.mu[0].parts = {};
  g.mu[1].parts = {1, 1};
  g.mu[2].parts = {2};
  g.mu[3].parts = {2};
  DerivedXrsa d = validate_xrsa(g);
  CHECK(d.m[0] == 0);
  CHECK(d.m_total == 4);
  CHECK(d.n == 3);
  CHECK(d.k0 == 1);  // s(n-1) - m_3 = 2 - 1

  // An odd total part count in the same family is indivisible.
  g.mu[2].parts = {1, 1};
  CHECK_THROWS_AS(validate_xrsa(g), IndivisibleError);
}

TEST_CASE("validate_blp2 on the worked data") {
  DerivedBlp2 d = validate_blp2(theorem52_example());
  CHECK(d.m == std::vector<int>{1, 1, 4, 1, 1});
  CHECK(d.m_total == 8);
  CHECK(d.n == 5);

  GammaBlp2 g2;
  g2.d = 6;
  g2.mu.resize(5);
  g2.mu[0].parts = {1};
  g2.mu[1].parts = {1, 1};
  g2.mu[2].parts = {1, 1, 1};
  g2.mu[3].parts = {5};
  g2.mu[4].parts = {4};
  DerivedBlp2 d2 = validate_blp2(g2);
  CHECK(d2.m_total == 8);
  CHECK(d2.n == 5);
}

TEST_CASE("validate_blp2 error taxonomy") {
  GammaBlp2 g = theorem52_example();
  SUBCASE("mu_4 sum breaks d - |mu_1|") {
    g.mu[3].parts = {4};
    CHECK_THROWS_AS(validate_blp2(g), DegreeMismatchError);
  }
  SUBCASE("odd m") {
    g.mu[2].parts = {2, 1, 1};  // sums still 4, m becomes 7
    CHECK_THROWS_AS(validate_blp2(g), IndivisibleError);
  }
  SUBCASE("nonpositive part") {
    g.mu[0].parts = {-1};
    CHECK_THROWS_AS(validate_blp2(g), NonPositivePartError);
  }
  SUBCASE("wrong mu count") {
    g.mu.resize(4);
    CHECK_THROWS_AS(validate_blp2(g), ValidationError);
  }
}

TEST_CASE("fuzz: perturbing one part flips acceptance unless compensated") {
  std::mt19937_64 rng(17);
  int checked = 0;
  enumerate_xrsa(XrsaSweepBounds{2, 2, 2, 8, 3}, [&](const GammaXrsa& g) {
    if (checked >= 300) return;
    // Pick one nonempty partition and bump a part by +-1.
    std::vector<int> candidates;
    for (int j = 0; j < static_cast<int>(g.mu.size()); ++j) {
      if (!g.mu[j].parts.empty()) candidates.push_back(j);
    }
    if (candidates.empty()) return;
    int j = candidates[rng() % candidates.size()];
    int v = static_cast<int>(rng() % g.mu[j].parts.size());
    long delta = (rng() % 2) ? 1 : -1;

    GammaXrsa mutated = g;
    mutated.mu[j].parts[v] += delta;
    // The block sum is pinned by (b, c, a), so the mutation must be
    // rejected (either a degree mismatch or a nonpositive part).
    CHECK_THROWS_AS(validate_xrsa(mutated), ValidationError);

    // Compensating inside the same block restores a valid sum (when the
    // compensated part stays positive), and then validation succeeds
    // whenever the divisibility constraint still holds.
    if (g.mu[j].parts.size() >= 2) {
      int w = (v + 1) % static_cast<int>(g.mu[j].parts.size());
      GammaXrsa fixed = mutated;
      fixed.mu[j].parts[w] -= delta;
      if (fixed.mu[j].parts[v] >= 1 && fixed.mu[j].parts[w] >= 1) {
        CHECK_NOTHROW(validate_xrsa(fixed));
      }
    }
    ++checked;
  });
  CHECK(checked > 100);
}

TEST_CASE("document parsing round-trips") {
  GammaDocument doc;
  doc.target = GammaDocument::Target::xrsa;
  doc.xrsa = x111_example();
  std::string text = gamma_document_to_json(doc);
  GammaDocument back = parse_gamma_document(text);
  CHECK(back.target == GammaDocument::Target::xrsa);
  CHECK(back.xrsa.r == 1);
  CHECK(back.xrsa.c == 2);
  CHECK(back.xrsa.mu[3].parts == std::vector<long>{2});

  GammaDocument bdoc;
  bdoc.target = GammaDocument::Target::blp2;
  bdoc.blp2 = theorem52_example();
  GammaDocument bback = parse_gamma_document(gamma_document_to_json(bdoc));
  CHECK(bback.target == GammaDocument::Target::blp2);
  CHECK(bback.blp2.d == 6);
  CHECK(bback.blp2.mu[2].parts == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("document parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_gamma_document("not json"), ValidationError);
  CHECK_THROWS_AS(parse_gamma_document("{}"), ValidationError);
  CHECK_THROWS_AS(parse_gamma_document(R"({"target": "nope"})"),
                  ValidationError);
  // Unknown fields are rejected.
  CHECK_THROWS_AS(
      parse_gamma_document(
          R"({"target": "blp2", "d": 6, "mu": [[1],[1],[1,1,1,1],[5],[5]], "extra": 1})"),
      ValidationError);
  // Missing required field.
  CHECK_THROWS_AS(parse_gamma_document(R"({"target": "xrsa", "r": 1})"),
                  ValidationError);
}

TEST_CASE("partitions_of enumerates canonically") {
  std::vector<Partition> ps = partitions_of(4, 3, 4);
  // 3+1, 2+2, 2+1+1, 1+1+1+1.
  CHECK(ps.size() == 4);
  for (const auto& p : ps) {
    CHECK(p.sum() == 4);
    for (size_t i = 1; i < p.parts.size(); ++i) {
      CHECK(p.parts[i - 1] >= p.parts[i]);
    }
  }
  CHECK(partitions_of(0, 3, 4).size() == 1);  // the empty partition
  CHECK(partitions_of(5, 1, 4).empty());      // needs 5 parts, cap is 4
}

TEST_CASE("enumerate emits only valid data") {
  int count = 0;
  enumerate_xrsa(XrsaSweepBounds{2, 2, 1, 6, 2}, [&](const GammaXrsa& g) {
    CHECK_NOTHROW(validate_xrsa(g));
    ++count;
  });
  CHECK(count > 0);

  int bcount = 0;
  enumerate_blp2(Blp2SweepBounds{6, 3}, [&](const GammaBlp2& g) {
    CHECK_NOTHROW(validate_blp2(g));
    ++bcount;
  });
  CHECK(bcount > 0);
}
