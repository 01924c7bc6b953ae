#include "adp/catalog.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace adp {

namespace {

using Coeffs = std::array<std::int64_t, 2>;
using nlohmann::ordered_json;

const std::pair<Contraction, const char*> kContractionNames[] = {
    {Contraction::QuadricFibration, "quadric_fibration"}, {Contraction::P1Bundle, "p1_bundle"},
    {Contraction::PnBundle, "pn_bundle"},                 {Contraction::QuadricBundle, "quadric_bundle"},
    {Contraction::PointBlowup, "point_blowup"},           {Contraction::Fano, "fano"},
};

const std::pair<AnticanonicalMap, const char*> kMapNames[] = {
    {AnticanonicalMap::Ample, "ample"},
    {AnticanonicalMap::Small, "small"},
    {AnticanonicalMap::Divisorial, "divisorial"},
};

FamilyRecord rec(std::string id, int dim, int degree, int picard, Contraction c, AnticanonicalMap a,
                 std::optional<std::string> partner, std::optional<std::string> smoothing, std::string citation,
                 std::string notes) {
  FamilyRecord r;
  r.id = std::move(id);
  r.dim = dim;
  r.degree = degree;
  r.picard = picard;
  r.index = dim - 1;
  r.contraction = c;
  r.anticanonical_map = a;
  r.flop_partner = std::move(partner);
  r.smoothing = std::move(smoothing);
  r.citation = std::move(citation);
  r.notes = std::move(notes);
  return r;
}

constexpr auto kQF = Contraction::QuadricFibration;
constexpr auto kP1B = Contraction::P1Bundle;
constexpr auto kQB = Contraction::QuadricBundle;
constexpr auto kBl = Contraction::PointBlowup;
constexpr auto kFano = Contraction::Fano;
constexpr auto kAmple = AnticanonicalMap::Ample;
constexpr auto kSmall = AnticanonicalMap::Small;
constexpr auto kDiv = AnticanonicalMap::Divisorial;
const std::nullopt_t none = std::nullopt;

std::vector<FamilyRecord> make_catalog() {
  std::vector<FamilyRecord> c;

  // Smooth del Pezzo manifolds (threefold representatives).
  c.push_back(rec("thm2.1-1", 3, 1, 1, kFano, kAmple, none, none, "Theorem 2.1(1)",
                  "V_{2,1}; double cover of the Veronese cone ramified along a cubic"));
  c.push_back(rec("thm2.1-2", 3, 2, 1, kFano, kAmple, none, none, "Theorem 2.1(2)",
                  "V_{2,2}; double cover of P_n ramified along a quartic"));
  c.push_back(rec("thm2.1-3", 3, 3, 1, kFano, kAmple, none, none, "Theorem 2.1(3)", "V_{2,3}; cubic in P_{n+1}"));
  c.push_back(rec("thm2.1-4", 3, 4, 1, kFano, kAmple, none, none, "Theorem 2.1(4)",
                  "V_{2,4}; complete intersection of two quadrics in P_{n+2}"));
  c.push_back(rec("thm2.1-5", 3, 5, 1, kFano, kAmple, none, none, "Theorem 2.1(5)",
                  "V_{2,5}; linear section of the Grassmannian Gr(2;5) in P_9; n <= 6"));
  c.push_back(rec("thm2.1-6a", 3, 6, 2, kFano, kAmple, none, none, "Theorem 2.1(6a)", "P(T_P2)"));
  c.push_back(rec("thm2.1-6b", 3, 6, 3, kFano, kAmple, none, none, "Theorem 2.1(6b)",
                  "P1 x P1 x P1 (n = 3; recorded here) or P2 x P2 (n = 4; rho = 2)"));
  c.push_back(rec("thm2.1-7", 3, 7, 2, kFano, kAmple, none, none, "Theorem 2.1(7)", "Bl_p(P3) = P(O + O(1)) over P2"));
  c.push_back(rec("thm2.1-8", 3, 8, 1, kFano, kAmple, none, none, "Theorem 2.1(8)", "P3 with H = O(2)"));

  // Divisorial anticanonical map (data from the earlier classification).
  c.push_back(rec("thm3.1-1a", 3, 1, 2, kQF, kDiv, none, none, "Theorem 3.1(1a)",
                  "JPR A.2.12; X' double cover of the Veronese cone singular along a rational quartic curve"));
  c.push_back(rec("thm3.1-1b", 3, 2, 2, kQF, kDiv, none, none, "Theorem 3.1(1b)",
                  "JPR A.2.15; X' double cover of P3 singular along a conic"));
  c.push_back(rec("thm3.1-1c", 3, 2, 2, kQF, kDiv, none, none, "Theorem 3.1(1c)",
                  "JPR A.2.9; X' double cover of P3 singular along an elliptic quartic curve"));
  c.push_back(rec("thm3.1-1d", 3, 4, 2, kQF, kDiv, none, none, "Theorem 3.1(1d)",
                  "JPR A.2.14; X' quadric hypersurface in P(1^2;2^3) singular along a conic"));
  c.push_back(rec("thm3.1-2a", 3, 3, 2, kP1B, kDiv, none, none, "Theorem 3.1(2a)",
                  "JPR A.3.3 and A.3.4; F in M(-1;4) stable Hulsbergen bundle; X' cubic in P4"));
  c.push_back(rec("thm3.1-2b", 3, 6, 2, kP1B, kDiv, none, none, "Theorem 3.1(2b)",
                  "JPR A.3.2; 0 -> O -> F -> I_p(-1) -> 0 so c1 = -1 and c2 = 1"));
  c.push_back(rec("thm3.1-2c", 3, 9, 2, kP1B, kDiv, none, none, "Theorem 3.1(2c)",
                  "JPR A.3.1; F = O + O(3); X' = P(1^3;3)"));
  c.push_back(rec("thm3.1-3a", 3, 1, 2, kBl, kDiv, none, none, "Theorem 3.1(3a)",
                  "JPR A.5.5 and A.5.6; Bl_p(V_{2,2})"));
  c.push_back(rec("thm3.1-3b", 3, 2, 2, kBl, kDiv, none, none, "Theorem 3.1(3b)", "JPR A.5.7; Bl_p(V_{2,3})"));

  // Small anticanonical map; quadric fibrations.
  c.push_back(rec("thm3.4-1", 3, 2, 2, kQF, kSmall, "thm3.4-1", "thm2.1-2", "Theorem 3.4(1)",
                  "X in P3 x P1 = F(0^4) from |2z + 2F|; alpha = 2"));
  c.push_back(rec("thm3.4-2", 3, 3, 2, kQF, kSmall, "thm3.6-3", "thm2.1-3", "Theorem 3.4(2)",
                  "X in F(0^3;1) from |2z + F|; alpha = 1; X+ = Bl_p(V_{2,4})"));
  c.push_back(rec("thm3.4-3", 3, 4, 2, kQF, kSmall, "thm3.4-3", "thm2.1-4", "Theorem 3.4(3)",
                  "X in F(0^2;1^2) from |2z|; alpha = 0; X+ of the same type"));
  c.push_back(rec("thm3.4-4", 3, 5, 2, kQF, kSmall, "thm3.5-1", "thm2.1-5", "Theorem 3.4(4)",
                  "X in F(0;1^3) from |2z - F|; alpha = -1; X+ = P(F) with F in M(-1;2)"));
  c.push_back(rec("thm3.4-5", 3, 2, 2, kQF, kSmall, "thm3.4-5", "thm2.1-2", "Theorem 3.4(5)",
                  "X in F(-1;0^2;1) from |2z + 2F|; alpha = 2"));
  c.push_back(rec("thm3.4-6", 3, 1, 2, kQF, kSmall, "thm3.4-6", "thm2.1-1", "Theorem 3.4(6)",
                  "X in F(-1;0^3) from |2z + 3F|; alpha = 3; hyperelliptic"));

  // Small; P1-bundles over P2.
  c.push_back(rec("thm3.5-1", 3, 5, 2, kP1B, kSmall, "thm3.4-4", "thm2.1-5", "Theorem 3.5(1)",
                  "X = P(F) on P2; c1(F) = -1; c2(F) = 2; one jumping line"));
  c.push_back(rec("thm3.5-2", 3, 4, 2, kP1B, kSmall, "thm3.6-4", "thm2.1-4", "Theorem 3.5(2)",
                  "X = P(F) on P2; c1(F) = -1; c2(F) = 3; X+ = Bl_p(V_{2,5})"));
  c.push_back(rec("thm3.5-3", 3, 3, 2, kP1B, kSmall, "thm3.5-3", "thm2.1-3", "Theorem 3.5(3)",
                  "X = P(F) on P2; c1(F) = -1; c2(F) = 4; X+ of the same type"));
  c.push_back(rec("thm3.5-4", 3, 2, 2, kP1B, kSmall, "thm3.5-4", "thm2.1-2", "Theorem 3.5(4)",
                  "X = P(F) on P2; c1(F) = -1; c2(F) = 5"));

  // Small; blow-ups of a general point.
  c.push_back(rec("thm3.6-1", 3, 1, 2, kBl, kSmall, "thm3.6-1", "thm2.1-1", "Theorem 3.6(1)", "Bl_p(V_{2,2})"));
  c.push_back(rec("thm3.6-2", 3, 2, 2, kBl, kSmall, "thm3.6-2", "thm2.1-2", "Theorem 3.6(2)", "Bl_p(V_{2,3})"));
  c.push_back(rec("thm3.6-3", 3, 3, 2, kBl, kSmall, "thm3.4-2", "thm2.1-3", "Theorem 3.6(3)", "Bl_p(V_{2,4})"));
  c.push_back(rec("thm3.6-4", 3, 4, 2, kBl, kSmall, "thm3.5-2", "thm2.1-4", "Theorem 3.6(4)", "Bl_p(V_{2,5})"));

  // Picard number three: P(F) over P1 x P1 and F2 with c1 = -K_S.
  for (int c2 : {0, 2, 3, 4, 5, 6, 7}) {
    for (const char* s : {"p1xp1", "f2"}) {
      const bool f2 = std::string_view(s) == "f2";
      std::string notes = "P(F) over ";
      notes += f2 ? "F2" : "P1 x P1";
      notes += "; c1(F) = -K_S; c2(F) = " + std::to_string(c2);
      if (c2 == 0) notes += "; F = -K_S + O (split)";
      if (c2 >= 2) notes += "; two points of Z on a ruling line; remaining points general";
      if (c2 == 2 && !f2) notes += "; uniform subcase F = O(1;2) + O(1;0)";
      if (c2 >= 2) notes += "; anticanonical map type inferred from the contracted ruling sections";
      if (f2) notes += "; omitted in the source: mirrors the P1 x P1 case";
      c.push_back(rec("thm4.1-2-" + std::string(s) + "-c" + std::to_string(c2), 3, 8 - c2, 3, kP1B,
                      c2 == 0 ? kDiv : kSmall, none, none, "Theorem 4.1(2)", notes));
    }
  }

  // Gorenstein del Pezzo n-folds (n >= 4; fourfold representatives).
  c.push_back(rec("prop5.1-1", 4, 1, 1, kFano, kAmple, none, none, "Proposition 5.1(1)",
                  "weighted hypersurface of degree 6 in P(3;2;1^n)"));
  c.push_back(rec("prop5.1-2", 4, 2, 1, kFano, kAmple, none, none, "Proposition 5.1(2)",
                  "weighted hypersurface of degree 4 in P(2;1^(n+1)); double cover of P_n"));
  c.push_back(rec("prop5.1-3", 4, 3, 1, kFano, kAmple, none, none, "Proposition 5.1(3)", "cubic in P_{n+1}"));
  c.push_back(rec("prop5.1-4", 4, 4, 1, kFano, kAmple, none, none, "Proposition 5.1(4)",
                  "complete intersection of two quadrics in P_{n+2}"));
  c.push_back(rec("prop5.1-5", 4, 5, 1, kFano, kAmple, none, none, "Proposition 5.1(5)",
                  "cone; parametric record: any d >= 5"));
  c.push_back(rec("prop5.1-6", 5, 5, 1, kFano, kAmple, none, none, "Proposition 5.1(6)",
                  "not a cone; (n;d) in {(4;6) (4;5) (5;5)}; (5;5) recorded"));

  // Quadric bundles over P1 in dimension >= 4.
  c.push_back(rec("thm5.8-1", 4, 5, 2, kQB, kSmall, none, none, "Theorem 5.8(1)",
                  "cone exception (any n >= 4); small resolution P(F'(2) + O^(n-3)) over P2 with c1(F') = -1 and "
                  "c2(F') = 2"));
  c.push_back(rec("thm5.8-2", 5, 5, 2, kQB, kSmall, none, none, "Theorem 5.8(2)",
                  "X' singular hyperplane section of G(1;4); model tower over P1 x P2"));
  c.push_back(rec("thm5.8-3", 4, 5, 2, kQB, kSmall, none, none, "Theorem 5.8(3)",
                  "hyperplane section of thm5.8-2; printed as H^5 = 4 but a hyperplane section keeps degree 5"));

  std::sort(c.begin(), c.end(), [](const FamilyRecord& a, const FamilyRecord& b) { return a.id < b.id; });
  return c;
}

TowerModel quadric_fibration(std::vector<int> a, std::int64_t alpha) {
  TowerModel m;
  m.base = BaseKind::P1;
  for (int x : a) m.twists.push_back({x, 0});
  m.cuts.push_back(ClassSpec{2, {alpha, 0}});
  m.polarization = ClassSpec{1, {0, 0}};
  m.pushforward = a;
  return m;
}

TowerModel rank2_bundle(BaseKind base, int e, Coeffs c1, std::int64_t c2, ClassSpec h) {
  TowerModel m;
  m.base = base;
  m.e = e;
  m.rank = 2;
  m.c1 = c1;
  m.c2 = c2;
  m.polarization = h;
  return m;
}

TowerModel split_bundle(BaseKind base, std::vector<Coeffs> twists, ClassSpec h) {
  TowerModel m;
  m.base = base;
  m.twists = std::move(twists);
  m.polarization = h;
  return m;
}

TowerModel degree5_fivefold() {
  TowerModel m = split_bundle(BaseKind::P1xP2, {{1, 1}, {0, 0}, {0, 0}, {0, 0}}, ClassSpec{1, {0, 0}});
  m.cuts.push_back(ClassSpec{1, {0, 1}});
  m.index_check = false;
  m.note = "resolution X~ in |z + h| of W = P(O(h + p) + O^3) over P1 x P2; K differs by the exceptional divisor";
  return m;
}

std::map<std::string, FamilyModel, std::less<>> make_models() {
  std::map<std::string, FamilyModel, std::less<>> m;
  const ClassSpec z{1, {0, 0}};

  m["thm2.1-1"] = WeightedModel{{6}, {3, 2, 1, 1, 1}};
  m["thm2.1-2"] = WeightedModel{{4}, {2, 1, 1, 1, 1}};
  m["thm2.1-3"] = WeightedModel{{3}, {1, 1, 1, 1, 1}};
  m["thm2.1-4"] = WeightedModel{{2, 2}, {1, 1, 1, 1, 1, 1}};
  m["thm2.1-5"] = GrassmannianModel{2, 5};
  m["thm2.1-6a"] = rank2_bundle(BaseKind::P2, 0, {3, 0}, 3, z);
  m["thm2.1-6b"] = split_bundle(BaseKind::P1xP1, {{0, 0}, {0, 0}}, ClassSpec{1, {1, 1}});
  m["thm2.1-7"] = split_bundle(BaseKind::P2, {{0, 0}, {1, 0}}, ClassSpec{1, {1, 0}});
  {
    TowerModel p3 = split_bundle(BaseKind::P2, {{0, 0}, {1, 0}}, ClassSpec{2, {0, 0}});
    p3.index_check = false;
    p3.note = "pull-back of O_P3(2) to Bl_p(P3) = P(O + O(1))";
    m["thm2.1-8"] = p3;
  }

  m["thm3.1-1a"] = WeightedModel{{6}, {3, 2, 1, 1, 1}};
  m["thm3.1-1b"] = WeightedModel{{4}, {2, 1, 1, 1, 1}};
  m["thm3.1-1c"] = WeightedModel{{4}, {2, 1, 1, 1, 1}};
  m["thm3.1-1d"] = NoModel{"divisorial classification consumed as data; no finite model recorded"};
  m["thm3.1-2a"] = rank2_bundle(BaseKind::P2, 0, {-1, 0}, 4, ClassSpec{1, {2, 0}});
  m["thm3.1-2b"] = rank2_bundle(BaseKind::P2, 0, {-1, 0}, 1, ClassSpec{1, {2, 0}});
  m["thm3.1-2c"] = split_bundle(BaseKind::P2, {{-2, 0}, {1, 0}}, ClassSpec{1, {2, 0}});
  m["thm3.1-3a"] = BlowupModel{"thm2.1-2"};
  m["thm3.1-3b"] = BlowupModel{"thm2.1-3"};

  m["thm3.4-1"] = quadric_fibration({0, 0, 0, 0}, 2);
  m["thm3.4-2"] = quadric_fibration({0, 0, 0, 1}, 1);
  m["thm3.4-3"] = quadric_fibration({0, 0, 1, 1}, 0);
  m["thm3.4-4"] = quadric_fibration({0, 1, 1, 1}, -1);
  m["thm3.4-5"] = quadric_fibration({-1, 0, 0, 1}, 2);
  m["thm3.4-6"] = quadric_fibration({-1, 0, 0, 0}, 3);

  for (int c2 = 2; c2 <= 5; ++c2) {
    m["thm3.5-" + std::to_string(c2 - 1)] = rank2_bundle(BaseKind::P2, 0, {-1, 0}, c2, ClassSpec{1, {2, 0}});
  }
  for (int d = 1; d <= 4; ++d) m["thm3.6-" + std::to_string(d)] = BlowupModel{"thm2.1-" + std::to_string(d + 1)};

  for (int c2 : {0, 2, 3, 4, 5, 6, 7}) {
    m["thm4.1-2-p1xp1-c" + std::to_string(c2)] = rank2_bundle(BaseKind::P1xP1, 0, {2, 2}, c2, z);
    m["thm4.1-2-f2-c" + std::to_string(c2)] = rank2_bundle(BaseKind::Hirzebruch, 2, {2, 4}, c2, z);
  }

  m["prop5.1-1"] = WeightedModel{{6}, {3, 2, 1, 1, 1, 1}};
  m["prop5.1-2"] = WeightedModel{{4}, {2, 1, 1, 1, 1, 1}};
  m["prop5.1-3"] = WeightedModel{{3}, {1, 1, 1, 1, 1, 1}};
  m["prop5.1-4"] = WeightedModel{{2, 2}, {1, 1, 1, 1, 1, 1, 1}};
  m["prop5.1-5"] = NoModel{"no finite model: parametric cone record"};
  m["prop5.1-6"] = degree5_fivefold();

  {
    TowerModel cone = rank2_bundle(BaseKind::P2, 0, {3, 0}, 4, z);
    cone.rank = 3;
    cone.note = "small resolution P(F'(2) + O) over P2 at n = 4";
    m["thm5.8-1"] = cone;
  }
  m["thm5.8-2"] = degree5_fivefold();
  {
    TowerModel section = degree5_fivefold();
    section.cuts.push_back(z);
    section.note = "general hyperplane section (class z) of the thm5.8-2 model";
    m["thm5.8-3"] = section;
  }
  return m;
}

const std::map<std::string, FamilyModel, std::less<>>& models() {
  static const auto m = make_models();
  return m;
}

std::vector<TowerConstruction> make_constructions() {
  std::vector<TowerConstruction> out;
  {
    TowerConstruction t;
    t.name = "degree-5 fivefold";
    t.citation = "Theorem 5.6";
    t.tower = degree5_fivefold();
    t.expected_adjunction = ClassSpec{-3, {-1, -1}};
    t.expected_degree = 5;
    t.note = "W = P(O_M(1) + O_M^3) over M = P1 x P2; O_M(1) = h + p; X~ in |z + h|";
    out.push_back(t);
  }
  {
    TowerConstruction t;
    t.name = "(4,6) fourfold";
    t.citation = "Proposition 5.5";
    t.tower = split_bundle(BaseKind::P2, {{2, 0}, {0, 0}, {0, 0}, {0, 0}}, ClassSpec{1, {0, 0}});
    t.tower.cuts.push_back(ClassSpec{1, {1, 0}});
    t.expected_adjunction = ClassSpec{-3, {0, 0}};
    t.expected_degree = 6;
    t.note =
        "V printed as O + O^3; D in |z - 2h| and the degree-6 outcome require V = O(2) + O^3, which is used here";
    out.push_back(t);
  }
  {
    TowerConstruction t;
    t.name = "(4,5) fourfold over F1";
    t.citation = "Theorem 5.7";
    TowerModel m;
    m.base = BaseKind::Hirzebruch;
    m.e = 1;
    m.twists = {{1, 2}, {0, 0}, {0, 0}, {0, 0}};
    m.polarization = ClassSpec{1, {0, 0}};
    m.cuts.push_back(ClassSpec{1, {1, 1}});
    t.tower = m;
    t.expected_adjunction = ClassSpec{-3, {0, 0}};
    t.expected_degree = 5;
    t.note = "M = P(O(2) + O(1)) = F1 with O_M(1) = C0 + 2f; X~ in |z + O_M(1) - F| = |z + C0 + f|";
    out.push_back(t);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(Contraction c) {
  for (const auto& [k, n] : kContractionNames)
    if (k == c) return n;
  return "?";
}

std::string to_string(AnticanonicalMap a) {
  for (const auto& [k, n] : kMapNames)
    if (k == a) return n;
  return "?";
}

Contraction contraction_from_string(std::string_view s) {
  for (const auto& [k, n] : kContractionNames)
    if (s == n) return k;
  throw std::invalid_argument("unknown contraction '" + std::string(s) + "'");
}

AnticanonicalMap anticanonical_map_from_string(std::string_view s) {
  for (const auto& [k, n] : kMapNames)
    if (s == n) return k;
  throw std::invalid_argument("unknown anticanonical map '" + std::string(s) + "'");
}

const std::vector<FamilyRecord>& builtin_catalog() {
  static const std::vector<FamilyRecord> c = make_catalog();
  return c;
}

std::optional<FamilyRecord> lookup(const std::vector<FamilyRecord>& catalog, std::string_view id) {
  if (id.empty()) return std::nullopt;
  for (const auto& r : catalog)
    if (r.id == id) return r;
  // V_{2,d} aliases the threefold del Pezzo of Picard number one and degree d.
  if (id.size() == 7 && id.substr(0, 5) == "V_{2," && id[6] == '}' && id[5] >= '1' && id[5] <= '5') {
    return lookup(catalog, "thm2.1-" + std::string(1, id[5]));
  }
  return std::nullopt;
}

std::optional<FamilyRecord> lookup(std::string_view id) { return lookup(builtin_catalog(), id); }

ordered_json to_json(const FamilyRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["dim"] = r.dim;
  j["degree"] = r.degree;
  j["picard"] = r.picard;
  j["index"] = r.index;
  j["contraction"] = to_string(r.contraction);
  j["anticanonical_map"] = to_string(r.anticanonical_map);
  if (r.flop_partner) j["flop_partner"] = *r.flop_partner;
  if (r.smoothing) j["smoothing"] = *r.smoothing;
  j["citation"] = r.citation;
  j["notes"] = r.notes;
  return j;
}

FamilyRecord record_from_json(const ordered_json& j) {
  FamilyRecord r;
  r.id = j.at("id").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.degree = j.at("degree").get<int>();
  r.picard = j.at("picard").get<int>();
  r.index = j.at("index").get<int>();
  r.contraction = contraction_from_string(j.at("contraction").get<std::string>());
  r.anticanonical_map = anticanonical_map_from_string(j.at("anticanonical_map").get<std::string>());
  if (j.contains("flop_partner")) r.flop_partner = j.at("flop_partner").get<std::string>();
  if (j.contains("smoothing")) r.smoothing = j.at("smoothing").get<std::string>();
  r.citation = j.at("citation").get<std::string>();
  r.notes = j.at("notes").get<std::string>();
  return r;
}

std::string export_catalog(const std::vector<FamilyRecord>& catalog, ExportFormat format) {
  std::vector<const FamilyRecord*> sorted;
  for (const auto& r : catalog) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });

  if (format == ExportFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto* r : sorted) arr.push_back(to_json(*r));
    return arr.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "id,dim,degree,picard,index,contraction,anticanonical_map,flop_partner,smoothing,citation,notes\n";
  for (const auto* r : sorted) {
    os << csv_field(r->id) << ',' << r->dim << ',' << r->degree << ',' << r->picard << ',' << r->index << ','
       << to_string(r->contraction) << ',' << to_string(r->anticanonical_map) << ','
       << csv_field(r->flop_partner.value_or("")) << ',' << csv_field(r->smoothing.value_or("")) << ','
       << csv_field(r->citation) << ',' << csv_field(r->notes) << '\n';
  }
  return os.str();
}

std::vector<FamilyRecord> parse_catalog_json(std::string_view text) {
  const auto j = ordered_json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("catalog JSON must be an array");
  std::vector<FamilyRecord> out;
  for (const auto& e : j) out.push_back(record_from_json(e));
  return out;
}

namespace {

// "thm2.1-5 (V_{2,5})" for the Picard-number-one threefold targets.
std::string smoothing_text(const std::optional<std::string>& s) {
  if (!s) return "-";
  if (s->size() == 8 && s->rfind("thm2.1-", 0) == 0 && (*s)[7] >= '1' && (*s)[7] <= '5') {
    return *s + " (V_{2," + (*s)[7] + "})";
  }
  return *s;
}

}  // namespace

void write_record_text(std::ostream& os, const FamilyRecord& r) {
  os << "id: " << r.id << '\n'
     << "dim: " << r.dim << '\n'
     << "degree: " << r.degree << '\n'
     << "picard: " << r.picard << '\n'
     << "index: " << r.index << '\n'
     << "contraction: " << to_string(r.contraction) << '\n'
     << "anticanonical_map: " << to_string(r.anticanonical_map) << '\n'
     << "flop_partner: " << r.flop_partner.value_or("-") << '\n'
     << "smoothing: " << smoothing_text(r.smoothing) << '\n'
     << "citation: " << r.citation << '\n'
     << "notes: " << r.notes << '\n';
}

const FamilyModel& model_for(std::string_view id) {
  static const FamilyModel unknown = NoModel{"unknown id"};
  auto it = models().find(id);
  return it == models().end() ? unknown : it->second;
}

BaseRing base_ring(const TowerModel& m) {
  switch (m.base) {
    case BaseKind::P1: return BaseRing::p1();
    case BaseKind::P2: return BaseRing::p2();
    case BaseKind::P1xP1: return BaseRing::p1xp1();
    case BaseKind::Hirzebruch: return BaseRing::hirzebruch(m.e);
    case BaseKind::P1xP2: return BaseRing::p1xp2();
  }
  throw std::logic_error("unknown base kind");
}

namespace {

ChowElement divisor_on(const AmbientPtr& a, std::int64_t z, const Coeffs& base) {
  ChowElement::Terms t;
  const int ngen = a->base().num_generators();
  for (int i = 0; i < ngen; ++i) {
    Monomial m;
    m.exps[i] = 1;
    t[m] = base[i];
  }
  if (z != 0) {
    Monomial m;
    m.exps[2] = 1;
    t[m] = z;
  }
  return ChowElement::from_terms(a, t, 1);
}

}  // namespace

AmbientPtr realize(const TowerModel& m) {
  const BaseRing base = base_ring(m);
  const AmbientPtr s = make_base(base);
  if (!m.twists.empty()) {
    std::vector<ChowElement> twists;
    for (const auto& t : m.twists) twists.push_back(divisor_on(s, 0, t));
    return make_tower(base, twists);
  }
  std::vector<ChowElement> chern{divisor_on(s, 0, m.c1)};
  if (base.dim() >= 2) chern.push_back(m.c2 * point_class(s));
  return make_tower_from_chern(base, m.rank, chern);
}

ChowElement realize(const AmbientPtr& a, const ClassSpec& c) { return divisor_on(a, c.z, c.base); }

const std::vector<TowerConstruction>& tower_constructions() {
  static const auto c = make_constructions();
  return c;
}

}  // namespace adp

namespace adp {

ChowElement cut_class(const AmbientPtr& a, const TowerModel& m) {
  ChowElement x = ChowElement::one(a);
  for (const auto& c : m.cuts) x = x * realize(a, c);
  return x;
}

int model_dim(const TowerModel& m) {
  const int base_dim = base_ring(m).dim();
  const int rank = m.twists.empty() ? m.rank : static_cast<int>(m.twists.size());
  return base_dim + rank - 1 - static_cast<int>(m.cuts.size());
}

std::int64_t model_degree(const TowerModel& m) {
  const AmbientPtr a = realize(m);
  const ChowElement h = realize(a, m.polarization);
  return integrate(h.pow(model_dim(m)) * cut_class(a, m));
}

ChowElement model_adjunction(const AmbientPtr& a, const TowerModel& m) {
  ChowElement k = canonical_class(a);
  for (const auto& c : m.cuts) k = k + realize(a, c);
  return k;
}

}  // namespace adp
