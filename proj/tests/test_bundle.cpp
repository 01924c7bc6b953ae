#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adp/bundle.hpp"

using namespace adp;

namespace {

// Monomials of degree a in k + 1 variables.
std::int64_t count_monomials(int a, int vars) {
  if (a < 0) return 0;
  if (vars == 1) return 1;
  std::int64_t s = 0;
  for (int i = 0; i <= a; ++i) s += count_monomials(a - i, vars - 1);
  return s;
}

ChowElement lin(const AmbientPtr& s, std::int64_t a, std::int64_t b = 0) {
  const auto& n = s->base().generator_names();
  ChowElement x = a * ChowElement::generator(s, n[0]);
  if (n.size() > 1) x = x + b * ChowElement::generator(s, n[1]);
  return x;
}

}  // namespace

TEST_CASE("sections of split bundles on P1 match monomial counts") {
  for (int a = -4; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      const SplitBundle e({b, a});
      CHECK(h0_split(e) == count_monomials(a, 2) + count_monomials(b, 2));
      CHECK(h1_split(e) == count_monomials(-a - 2, 2) + count_monomials(-b - 2, 2));
      // chi = deg + rank on P1
      CHECK(h0_split(e) - h1_split(e) == e.degree() + e.rank());
    }
  CHECK(SplitBundle({1, 0, 0, 0}).to_string() == "(0,0,0,1)");
  CHECK(h0_split(SplitBundle({0, 1, 1, 1})) == 7);
  CHECK_THROWS(SplitBundle(std::vector<int>{}));
}

TEST_CASE("rank-2 Riemann-Roch agrees with section counts of split bundles") {
  const AmbientPtr p2 = make_base(BaseRing::p2());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const Rank2Data f = make_rank2(p2, lin(p2, a + b), std::int64_t{a} * b);
      CHECK(chi_rank2(f) == count_monomials(a, 3) + count_monomials(b, 3));
    }
  const AmbientPtr q = make_base(BaseRing::p1xp1());
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d) {
          const Rank2Data f = make_rank2(q, lin(q, a + c, b + d), std::int64_t{a} * d + std::int64_t{b} * c);
          CHECK(chi_rank2(f) == (a + 1) * (b + 1) + (c + 1) * (d + 1));
        }
}

TEST_CASE("chi of F(2) on P2 is 9 - c2 for c1 = -1") {
  const AmbientPtr p2 = make_base(BaseRing::p2());
  const ChowElement h = ChowElement::generator(p2, "h");
  for (std::int64_t c2 = 0; c2 <= 8; ++c2) {
    const Rank2Data f = make_rank2(p2, -h, c2);
    const Rank2Data g = twist_rank2(f, 2 * h);
    CHECK(g.c1 == 3 * h);
    CHECK(g.c2 == c2 + 2);
    CHECK(chi_rank2(g) == 9 - c2);
    CHECK(rank2_degree(g) == 7 - c2);
    const SectionCount s = h0_from_chi(g);
    CHECK(s.value == 9 - c2);
    CHECK(s.assumes_higher_vanishing);
  }
}

TEST_CASE("twisting exposes c2 = -1 for c1 = -K and c2 = 1") {
  const AmbientPtr q = make_base(BaseRing::p1xp1());
  const Rank2Data f = make_rank2(q, lin(q, 2, 2), 1);
  const Rank2Data t = twist_rank2(f, lin(q, -1, -2));
  CHECK(t.c2 == -1);
  CHECK(t.c1 == lin(q, 0, -2));

  const AmbientPtr f2 = make_base(BaseRing::hirzebruch(2));
  CHECK(twist_rank2(make_rank2(f2, lin(f2, 2, 4), 1), lin(f2, -1, -3)).c2 == -1);
}

TEST_CASE("projectivized degree is c1^2 - c2") {
  const AmbientPtr q = make_base(BaseRing::p1xp1());
  for (std::int64_t c2 = 0; c2 <= 7; ++c2) {
    const Rank2Data f = make_rank2(q, lin(q, 2, 2), c2);
    const AmbientPtr x = projectivize(f);
    CHECK(integrate(ChowElement::generator(x, "z").pow(3)) == 8 - c2);
    CHECK(rank2_degree(f) == 8 - c2);
    CHECK(canonical_class(x) == -2 * ChowElement::generator(x, "z"));
  }
}

TEST_CASE("rank-2 data validation") {
  const AmbientPtr p1 = make_base(BaseRing::p1());
  const AmbientPtr p2 = make_base(BaseRing::p2());
  CHECK_THROWS(make_rank2(p1, ChowElement::generator(p1, "F"), 0));
  CHECK_THROWS(make_rank2(p2, ChowElement::one(p2), 0));
  CHECK_THROWS(make_rank2(p2, ChowElement::generator(make_base(BaseRing::p1xp1()), "f1"), 0));
}

TEST_CASE("point blow-ups") {
  const BlowupStep s = blowup_degree(3, 5);
  CHECK(s.degree == 4);
  CHECK(s.valid);
  CHECK(s.general_point_ok);
  for (int n = 3; n <= 7; ++n) {
    CHECK_FALSE(blowup_degree(n, 1).valid);
    CHECK(blowup_degree(n, 1).degree == 0);
  }
  for (int d = 1; d <= 9; ++d) CHECK(blowup_chain_length(3, d) == d - 1);
  CHECK_THROWS(blowup_degree(2, 4));
  CHECK_THROWS(blowup_degree(3, 0));
  CHECK_THROWS(blowup_degree(3, -2));
}
