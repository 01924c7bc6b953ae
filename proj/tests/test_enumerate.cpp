#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "adp/catalog.hpp"
#include "adp/enumerate.hpp"

using namespace adp;

namespace {

std::vector<TupleVerdict> small_verdicts() {
  std::vector<TupleVerdict> out;
  for (const auto& v : enumerate_quadric_fibrations())
    if (v.kind == VerdictKind::Small) out.push_back(v);
  return out;
}

// F(a) = P(O(a1) + .. + O(a4)) over P1.
AmbientPtr scroll(const SplitBundle& e) {
  const AmbientPtr p1 = make_base(BaseRing::p1());
  std::vector<ChowElement> tw;
  for (int a : e.entries()) tw.push_back(a * ChowElement::generator(p1, "F"));
  return make_tower(BaseRing::p1(), tw);
}

const FamilyCandidate* by_id(const std::vector<FamilyCandidate>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.family_id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("documented quadric tuples") {
  const TupleVerdict a = classify_tuple(SplitBundle({0, 0, 1, 1}));
  CHECK(a.kind == VerdictKind::Small);
  CHECK(a.alpha == 0);
  CHECK(a.degree == 4);
  CHECK(a.family_id == "thm3.4-3");

  const TupleVerdict b = classify_tuple(SplitBundle({0, 0, 1, 2}));
  CHECK(b.kind == VerdictKind::Divisorial);
  CHECK(b.alpha == -1);
  CHECK(b.degree == 5);
  CHECK_FALSE(b.inferred);

  CHECK(classify_tuple(SplitBundle({-1, 0, 0, 2})).kind == VerdictKind::RejectedGeometric);
  CHECK(classify_tuple(SplitBundle({-1, -1, 0, 2})).kind == VerdictKind::RejectedGeometric);
  CHECK(classify_tuple(SplitBundle({0, 0, 0, 2})).inferred);
  CHECK(classify_tuple(SplitBundle({-1, -1, -1, -1})).kind == VerdictKind::RejectedRange);
  CHECK(classify_tuple(SplitBundle({1, 1, 1, 1})).kind == VerdictKind::RejectedRange);
  CHECK(classify_tuple(SplitBundle({0, 0, 1})).kind == VerdictKind::RejectedRange);
}

TEST_CASE("exactly six small quadric fibrations") {
  const std::map<std::vector<int>, std::string> want{
      {{-1, 0, 0, 0}, "thm3.4-6"}, {{-1, 0, 0, 1}, "thm3.4-5"}, {{0, 0, 0, 0}, "thm3.4-1"},
      {{0, 0, 0, 1}, "thm3.4-2"},  {{0, 0, 1, 1}, "thm3.4-3"},  {{0, 1, 1, 1}, "thm3.4-4"}};
  std::map<std::vector<int>, std::string> got;
  for (const auto& v : small_verdicts()) got[v.tuple.entries()] = v.family_id;
  CHECK(got == want);
}

TEST_CASE("small quadric degrees agree three ways") {
  for (const auto& v : small_verdicts()) {
    CAPTURE(v.tuple.to_string());
    const std::int64_t sum = v.tuple.degree();
    CHECK(sum - 2 + v.alpha == 0);
    CHECK(v.degree == sum + 2);
    const AmbientPtr w = scroll(v.tuple);
    const ChowElement z = ChowElement::generator(w, "z");
    const ChowElement x = 2 * z + v.alpha * ChowElement::generator(w, "F");
    CHECK(polarized_degree(w, x, z) == v.degree);
    CHECK(adjunction(w, x) == -2 * z);
    CHECK(lookup(v.family_id)->degree == v.degree);
    CHECK(h0_split(v.tuple) == v.degree + 2);
  }
}

TEST_CASE("no small quadric fibration beyond degree five") {
  for (const auto& v : enumerate_quadric_fibrations())
    if (v.degree > 5) CHECK(v.kind != VerdictKind::Small);
}

TEST_CASE("enumeration bounds lose nothing against a wider box") {
  std::set<std::vector<int>> listed;
  for (const auto& v : enumerate_quadric_fibrations()) listed.insert(v.tuple.entries());
  std::set<std::vector<int>> small_box;
  for (int a = -4; a <= 8; ++a)
    for (int b = a; b <= 8; ++b)
      for (int c = b; c <= 8; ++c)
        for (int d = c; d <= 8; ++d) {
          const TupleVerdict v = classify_tuple(SplitBundle({a, b, c, d}));
          if (v.kind == VerdictKind::Small || v.kind == VerdictKind::Divisorial) {
            CHECK(listed.count({a, b, c, d}) == 1);
            if (v.kind == VerdictKind::Small) small_box.insert({a, b, c, d});
          }
        }
  CHECK(small_box.size() == 6);
}

TEST_CASE("enumeration is deterministic and sorted") {
  const auto a = enumerate_quadric_fibrations();
  const auto b = enumerate_quadric_fibrations();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].tuple == b[i].tuple);
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].reason == b[i].reason);
    if (i) CHECK(a[i - 1].tuple < a[i].tuple);
  }
  CHECK(enumerate_p2_bundles().size() == enumerate_p2_bundles().size());
}

TEST_CASE("P1-bundles over P2") {
  const auto cs = enumerate_p2_bundles();
  REQUIRE(cs.size() == 7);
  for (const auto& c : cs) {
    const auto c2 = *c.value("c2");
    CAPTURE(c2);
    CHECK(c.value("chi_F2") == 9 - c2);
    CHECK(c.value("degree_rr") == c.value("degree_tower"));
    CHECK(c.degree == 7 - c2);
    if (c2 <= 1 || c2 == 6) {
      CHECK(c.excluded);
    } else {
      CHECK_FALSE(c.excluded);
      CHECK(c.family_id == "thm3.5-" + std::to_string(c2 - 1));
    }
  }
  CHECK(by_id(cs, "thm3.5-1")->flop_partner == "thm3.4-4");
  CHECK(by_id(cs, "thm3.5-2")->flop_partner == "thm3.6-4");
  CHECK(by_id(cs, "thm3.5-3")->flop_partner == "thm3.5-3");
}

TEST_CASE("point blow-ups of index-two Fano threefolds") {
  const auto cs = enumerate_point_blowups();
  std::set<std::string> ids;
  for (const auto& c : cs) {
    if (c.excluded) continue;
    ids.insert(*c.family_id);
    CHECK(c.picard == 2);
    const auto* b = std::get_if<BlowupV2>(&c.construction);
    REQUIRE(b);
    CHECK(c.degree == b->base_degree - 1);
  }
  CHECK(ids == std::set<std::string>{"thm3.6-1", "thm3.6-2", "thm3.6-3", "thm3.6-4"});
  CHECK(by_id(cs, "thm3.6-3")->flop_partner == "thm3.4-2");
  CHECK(by_id(cs, "thm3.6-4")->flop_partner == "thm3.5-2");
}

TEST_CASE("Picard rank three over quadric surfaces") {
  for (const BaseRing& s : {BaseRing::p1xp1(), BaseRing::hirzebruch(2)}) {
    const auto cs = enumerate_rho3(s);
    int admitted = 0;
    for (const auto& c : cs) {
      CHECK(c.picard == 3);
      if (c.excluded) continue;
      ++admitted;
      CHECK(c.degree == 8 - *c.value("c2"));
      CHECK(lookup(*c.family_id)->degree == c.degree);
    }
    CHECK(admitted == 7);
  }
  CHECK(enumerate_rho3(BaseRing::hirzebruch(2)).front().source_omitted);
  CHECK_THROWS_AS(enumerate_rho3(BaseRing::p2()), std::invalid_argument);
}

TEST_CASE("higher dimensions") {
  for (int n : {4, 5, 6}) {
    const auto cs = enumerate_highdim(n);
    CHECK_FALSE(cs.empty());
    for (const auto& c : cs) {
      CHECK(c.dim == n);
      if (c.value("degree_k2_minus_c2")) CHECK(c.value("degree_tower") == c.value("degree_k2_minus_c2"));
    }
    CHECK(by_id(cs, "thm5.8-1"));
  }
  CHECK(by_id(enumerate_highdim(5), "thm5.8-2"));
  CHECK(by_id(enumerate_highdim(4), "thm5.8-3")->degree == 5);
  CHECK_THROWS(enumerate_highdim(3));
}

TEST_CASE("flop partners share degree") {
  std::vector<FamilyCandidate> all = enumerate_p2_bundles();
  for (auto& c : enumerate_point_blowups()) all.push_back(c);
  for (const auto& c : all) {
    if (c.excluded || !c.flop_partner) continue;
    const auto p = lookup(*c.flop_partner);
    REQUIRE(p);
    CHECK(p->degree == c.degree);
  }
}
