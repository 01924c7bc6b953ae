#include "adp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "adp/catalog.hpp"
#include "adp/checked.hpp"

namespace adp {

namespace {

// Monotone tuples with a1 >= -1 and sum <= 3 have every entry <= 6.
constexpr int kEntryCap = 6;

std::string tuple_label(const SplitBundle& e, std::int64_t alpha) {
  return e.to_string() + "_" + std::to_string(alpha);
}

TupleVerdict verdict(const SplitBundle& e, std::int64_t sum, VerdictKind k, std::string reason) {
  TupleVerdict v{e, 0, 0, k, {}, {}, false};
  v.alpha = 2 - sum;
  v.degree = sum + 2;
  v.kind = k;
  v.reason = std::move(reason);
  return v;
}

TupleVerdict small(const SplitBundle& e, std::int64_t sum, int item) {
  TupleVerdict v = verdict(e, sum, VerdictKind::Small, "");
  v.family_id = "thm3.4-" + std::to_string(item);
  return v;
}

std::string self_or(int key, const std::map<int, std::string>& partners, const std::string& self) {
  auto it = partners.find(key);
  return it == partners.end() ? self : it->second;
}

ChowElement divisor(const AmbientPtr& s, std::int64_t a, std::int64_t b) { return realize(s, ClassSpec{0, {a, b}}); }

ChowElement minus_canonical(const AmbientPtr& s) { return -canonical_class(s); }

// Both degree routes for P(O^(n-3) + F') over a surface.
void add_pn_degrees(FamilyCandidate& c, const Rank2Data& f, int n) {
  const std::int64_t k2 = integrate(canonical_class(f.surface) * canonical_class(f.surface));
  const std::int64_t by_k = checked_sub(k2, f.c2);
  const AmbientPtr w = make_tower_from_chern(f.surface->base(), n - 1, {f.c1, f.c2 * point_class(f.surface)});
  const std::int64_t by_tower = integrate(ChowElement::generator(w, "z").pow(n));
  c.computed.push_back({"degree_k2_minus_c2", by_k});
  c.computed.push_back({"degree_tower", by_tower});
  if (by_k != by_tower) throw std::logic_error("P_{n-2}-bundle degree routes disagree for " + describe(c.construction));
  c.degree = by_tower;
}

std::optional<Rank2Data> rank2_from_model(const TowerModel& m) {
  const BaseRing br = base_ring(m);
  if (br.dim() != 2 || !m.cuts.empty() || m.polarization.z != 1) return std::nullopt;
  const AmbientPtr s = make_base(br);
  Rank2Data f{s, ChowElement::zero(s, 1), 0};
  if (!m.twists.empty()) {
    if (m.twists.size() != 2) return std::nullopt;
    const ChowElement a = divisor(s, m.twists[0][0], m.twists[0][1]);
    const ChowElement b = divisor(s, m.twists[1][0], m.twists[1][1]);
    f = make_rank2(s, a + b, integrate(a * b));
  } else {
    if (m.rank != 2) return std::nullopt;
    f = make_rank2(s, divisor(s, m.c1[0], m.c1[1]), m.c2);
  }
  return twist_rank2(f, divisor(s, m.polarization.base[0], m.polarization.base[1]));
}

std::int64_t highdim_quadric_degree(const std::string& id, int n) {
  const auto& model = std::get<TowerModel>(model_for(id));
  TowerModel m = model;
  if (id == "thm5.8-1") m.rank = n - 1;
  return model_degree(m);
}

const TowerConstruction& construction_by_citation(const std::string& citation) {
  for (const auto& t : tower_constructions())
    if (t.citation == citation) return t;
  throw std::logic_error("no tower construction for " + citation);
}

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Small: return "small";
    case VerdictKind::Divisorial: return "divisorial";
    case VerdictKind::RejectedRange: return "rejected_range";
    case VerdictKind::RejectedGeometric: return "rejected_geometric";
  }
  return "?";
}

TupleVerdict classify_tuple(const SplitBundle& e) {
  const std::int64_t sum = e.degree();
  if (e.rank() != 4) {
    return verdict(e, sum, VerdictKind::RejectedRange, "rank " + std::to_string(e.rank()) + " != 4");
  }
  const auto& a = e.entries();
  if (a[0] < -1) return verdict(e, sum, VerdictKind::RejectedRange, "a1 < -1 contradicts h1(E(-1)) = 0");
  if (sum < -1 || sum > 3) {
    return verdict(e, sum, VerdictKind::RejectedRange, "sum " + std::to_string(sum) + " outside [-1,3]");
  }
  if (a[0] >= 1) return verdict(e, sum, VerdictKind::RejectedRange, "a1 >= 1 forces sum >= 4");

  if (a[0] == 0) {
    if (a[3] == 0) return small(e, sum, 1);
    if (a[2] == 0) {
      if (a[3] == 1) return small(e, sum, 2);
      TupleVerdict v = verdict(e, sum, VerdictKind::Divisorial,
                               "O(1)^2.D.X = 2 - a4 = " + std::to_string(2 - a[3]) + " <= 0");
      v.inferred = true;
      return v;
    }
    if (a == std::vector<int>{0, 0, 1, 1}) return small(e, sum, 3);
    if (a == std::vector<int>{0, 0, 1, 2}) {
      return verdict(e, sum, VerdictKind::Divisorial, "X in |O(2) - F| so psi is divisorial");
    }
    if (a == std::vector<int>{0, 1, 1, 1}) return small(e, sum, 4);
    if (a[3] >= 2) {
      TupleVerdict v = verdict(e, sum, VerdictKind::Divisorial, "a4 >= 2 with a1 = 0");
      v.inferred = true;
      return v;
    }
    return verdict(e, sum, VerdictKind::RejectedGeometric, "no case for a1 = 0");
  }

  // a1 = -1
  if (a[1] < 0) return verdict(e, sum, VerdictKind::RejectedGeometric, "a1 = -1 requires a2 >= 0");
  const std::int64_t alpha = 2 - sum;
  if (alpha - 2 < 0 || alpha - 2 > 1) {
    return verdict(e, sum, VerdictKind::RejectedGeometric,
                   "a1 = -1 requires 0 <= alpha - 2 <= 1; alpha = " + std::to_string(alpha));
  }
  if (a == std::vector<int>{-1, 0, 0, 1}) return small(e, sum, 5);
  if (a == std::vector<int>{-1, 0, 0, 0}) return small(e, sum, 6);
  return verdict(e, sum, VerdictKind::RejectedGeometric, "a1 = -1 outside the two admissible tuples");
}

std::vector<TupleVerdict> enumerate_quadric_fibrations() {
  std::vector<TupleVerdict> out;
  for (int a1 = -1; a1 <= kEntryCap; ++a1)
    for (int a2 = a1; a2 <= kEntryCap; ++a2)
      for (int a3 = a2; a3 <= kEntryCap; ++a3)
        for (int a4 = a3; a4 <= kEntryCap; ++a4) {
          if (a1 + a2 + a3 + a4 > 3) break;
          out.push_back(classify_tuple(SplitBundle({a1, a2, a3, a4})));
        }
  return out;
}

std::optional<std::int64_t> FamilyCandidate::value(const std::string& key) const {
  for (const auto& [k, v] : computed)
    if (k == key) return v;
  return std::nullopt;
}

std::string describe(const Construction& c) {
  struct V {
    std::string operator()(const QuadricFibration& q) const {
      return "quadric fibration " + tuple_label(q.tuple, q.alpha);
    }
    std::string operator()(const P1BundleP2& p) const {
      return "P(F) over P2 c1=" + std::to_string(p.c1) + " c2=" + std::to_string(p.c2);
    }
    std::string operator()(const BlowupV2& b) const { return "Bl_p(" + b.base_id + ")"; }
    std::string operator()(const Rho3Bundle& r) const {
      const std::string s = r.surface == BaseKind::P1xP1 ? "P1xP1" : "F2";
      return "P(F) over " + s + " c2=" + std::to_string(r.c2);
    }
    std::string operator()(const PnBundle& p) const {
      return "P(O^" + std::to_string(p.n - 3) + " + F') over " + p.data.surface->base().name() + " from " + p.source;
    }
    std::string operator()(const QuadricBundleHighDim& q) const {
      return "quadric bundle (n,d)=(" + std::to_string(q.n) + "," + std::to_string(q.d) + ")";
    }
    std::string operator()(const PointBlowupChain& b) const {
      return "Bl_" + std::to_string(b.r) + "(" + b.base + ")";
    }
  };
  return std::visit(V{}, c);
}

std::vector<FamilyCandidate> enumerate_p2_bundles() {
  const BaseRing p2 = BaseRing::p2();
  const AmbientPtr s = make_base(p2);
  const ChowElement h = ChowElement::generator(s, "h");
  const std::map<int, std::string> partners{{2, "thm3.4-4"}, {3, "thm3.6-4"}};

  // -K_X = 2 eta + (3 - c1) L must be divisible by 2.
  std::vector<std::int64_t> c1s;
  for (std::int64_t c1 : {-1, 0})
    if ((3 - c1) % 2 == 0) c1s.push_back(c1);

  std::vector<FamilyCandidate> out;
  for (std::int64_t c1 : c1s) {
    for (std::int64_t c2 = 0; c2 <= 6; ++c2) {
      const Rank2Data f = make_rank2(s, c1 * h, c2);
      const Rank2Data f2 = twist_rank2(f, 2 * h);
      const std::int64_t chi = chi_rank2(f2);
      const AmbientPtr x = projectivize(f);
      const ChowElement hx = ChowElement::generator(x, "z") + 2 * pullback(x, h);
      const std::int64_t by_tower = integrate(hx.pow(3));

      FamilyCandidate c;
      c.construction = P1BundleP2{c1, c2};
      c.degree = rank2_degree(f2);
      c.dim = 3;
      c.picard = 2;
      c.citation = "Theorem 3.5";
      c.computed = {{"c1", c1}, {"c2", c2}, {"chi_F2", chi}, {"degree_rr", c.degree}, {"degree_tower", by_tower}};
      if (by_tower != c.degree) throw std::logic_error("P(F) degree routes disagree");
      c.spanned = c.degree != 1;
      if (chi < 3 || chi > 7) {
        c.excluded = true;
        c.reason = "chi(F(2)) = " + std::to_string(chi) + " outside the h0 window 3..7";
      } else if (c.degree < 2) {
        c.excluded = true;
        c.reason = "chi(F(2)) = " + std::to_string(chi) + " in window but d = " + std::to_string(c.degree) + " < 2";
      } else {
        const std::string id = "thm3.5-" + std::to_string(c2 - 1);
        c.family_id = id;
        c.flop_partner = self_or(static_cast<int>(c2), partners, id);
        c.citation = "Theorem 3.5(" + std::to_string(c2 - 1) + ")";
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<FamilyCandidate> enumerate_point_blowups() {
  std::vector<FamilyRecord> bases;
  for (const auto& r : builtin_catalog())
    if (r.id.rfind("thm2.1-", 0) == 0 && r.dim == 3 && r.picard == 1) bases.push_back(r);
  std::stable_sort(bases.begin(), bases.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });

  const std::map<int, std::string> partners{{3, "thm3.4-2"}, {4, "thm3.5-2"}};
  std::vector<FamilyCandidate> out;
  for (const auto& y : bases) {
    const BlowupStep step = blowup_degree(3, y.degree);
    FamilyCandidate c;
    c.construction = BlowupV2{y.id, y.degree};
    c.degree = step.degree;
    c.dim = 3;
    c.picard = 2;
    c.citation = "Theorem 3.6";
    c.computed = {{"base_degree", y.degree}, {"degree", step.degree}};
    if (!step.valid || !step.general_point_ok) {
      c.excluded = true;
      c.reason = "blow-up of " + y.id + " has degree " + std::to_string(step.degree) + " and is not big";
    } else if (step.degree > 5) {
      c.excluded = true;
      c.reason = "degree " + std::to_string(step.degree) + " outside the window 1..5 for small contractions";
    } else {
      const int d = static_cast<int>(step.degree);
      const std::string id = "thm3.6-" + std::to_string(d);
      c.family_id = id;
      c.flop_partner = self_or(d, partners, id);
      c.citation = "Theorem 3.6(" + std::to_string(d) + ")";
      c.spanned = d != 1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FamilyCandidate> enumerate_rho3(const BaseRing& surface) {
  const bool quadric = surface.kind() == BaseKind::P1xP1;
  if (!quadric && !(surface.kind() == BaseKind::Hirzebruch && surface.e() == 2)) {
    throw std::invalid_argument("enumerate_rho3: unsupported surface " + surface.name());
  }
  const AmbientPtr s = make_base(surface);
  const ChowElement c1 = minus_canonical(s);
  // Twist that turns c2 = 1 into c2 = -1.
  const ChowElement m = quadric ? divisor(s, -1, -2) : divisor(s, -1, -3);
  const std::string tag = quadric ? "p1xp1" : "f2";

  std::vector<FamilyCandidate> out;
  for (std::int64_t c2 = 0; c2 <= 7; ++c2) {
    const Rank2Data f = make_rank2(s, c1, c2);
    FamilyCandidate c;
    c.construction = Rho3Bundle{surface.kind(), c2, c2 >= 2};
    c.degree = rank2_degree(f);
    c.dim = 3;
    c.picard = 3;
    c.citation = "Theorem 4.1(2)";
    c.source_omitted = !quadric;
    const std::int64_t by_tower = integrate(ChowElement::generator(projectivize(f), "z").pow(3));
    c.computed = {{"c1_squared", integrate(c1 * c1)}, {"c2", c2}, {"degree_rr", c.degree}, {"degree_tower", by_tower}};
    if (by_tower != c.degree) throw std::logic_error("rho3 degree routes disagree");
    c.spanned = c.degree != 1;
    if (c2 == 1) {
      const Rank2Data t = twist_rank2(f, m);
      c.computed.push_back({"c2_twisted", t.c2});
      c.excluded = true;
      c.reason = "c2(F(" + m.to_string() + ")) = " + std::to_string(t.c2) + " < 0";
    } else {
      c.family_id = "thm4.1-2-" + tag + "-c" + std::to_string(c2);
      if (c2 == 0) c.notes = "split: F = -K_S + O";
      if (c2 >= 2) c.notes = "two points of Z on a ruling line; remaining points general";
      if (c2 == 2 && quadric) {
        c.notes += "; uniform subcase F = O(1,2) + O(1,0)";
        c.computed.push_back({"uniform_c2", integrate(divisor(s, 1, 2) * divisor(s, 1, 0))});
      }
    }
    if (!quadric) c.notes += c.notes.empty() ? "mirrors P1xP1" : "; mirrors P1xP1";
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FamilyCandidate> enumerate_highdim(int n) {
  if (n < 4) throw std::invalid_argument("enumerate_highdim: n must be at least 4");
  std::vector<FamilyCandidate> out;

  // P_{n-2}-bundles.
  std::vector<std::pair<std::string, Rank2Data>> sources;
  {
    const AmbientPtr p2 = make_base(BaseRing::p2());
    const ChowElement h = ChowElement::generator(p2, "h");
    for (const auto& c : enumerate_p2_bundles()) {
      if (c.excluded) continue;
      const auto& p = std::get<P1BundleP2>(c.construction);
      sources.push_back({*c.family_id, twist_rank2(make_rank2(p2, p.c1 * h, p.c2), 2 * h)});
    }
    for (const BaseRing& s : {BaseRing::p1xp1(), BaseRing::hirzebruch(2)}) {
      const AmbientPtr a = make_base(s);
      for (const auto& c : enumerate_rho3(s)) {
        if (c.excluded) continue;
        sources.push_back({*c.family_id, make_rank2(a, minus_canonical(a), std::get<Rho3Bundle>(c.construction).c2)});
      }
    }
    for (const auto& r : builtin_catalog()) {
      if (r.dim != 3 || r.anticanonical_map == AnticanonicalMap::Small) continue;
      if (std::any_of(sources.begin(), sources.end(), [&](const auto& s) { return s.first == r.id; })) continue;
      const auto* m = std::get_if<TowerModel>(&model_for(r.id));
      if (!m) continue;
      const auto f = rank2_from_model(*m);
      if (!f || !(f->c1 == minus_canonical(f->surface))) continue;
      sources.push_back({r.id, *f});
    }
  }
  for (const auto& [id, f] : sources) {
    FamilyCandidate c;
    c.construction = PnBundle{n, id, f};
    c.dim = n;
    c.picard = f.surface->base().kind() == BaseKind::P2 ? 2 : 3;
    c.citation = "Theorem 5.3";
    add_pn_degrees(c, f, n);
    c.notes = "0 -> O^" + std::to_string(n - 3) + " -> F -> F' -> 0";
    c.spanned = c.degree != 1;
    if (c.degree > 9) {
      c.excluded = true;
      c.reason = "degree " + std::to_string(c.degree) + " > 9";
    } else if (c.degree == 1) {
      c.notes += "; |H| has a simple base point";
    }
    out.push_back(std::move(c));
  }

  // Quadric bundles over P1.
  auto qb = [&](std::int64_t d, std::optional<std::string> id, std::string citation) {
    FamilyCandidate c;
    c.construction = QuadricBundleHighDim{n, d};
    c.degree = d;
    c.dim = n;
    c.picard = 2;
    c.family_id = std::move(id);
    c.citation = std::move(citation);
    return c;
  };
  {
    FamilyCandidate cone = qb(highdim_quadric_degree("thm5.8-1", n), "thm5.8-1", "Theorem 5.8(1)");
    cone.notes = "cone exception; small resolution is a P_{n-2}-bundle over P2";
    out.push_back(cone);
  }
  if (n == 5) {
    FamilyCandidate c = qb(highdim_quadric_degree("thm5.8-2", 5), "thm5.8-2", "Theorem 5.8(2)");
    c.notes = "X' singular hyperplane section of G(1,4)";
    out.push_back(c);
  }
  if (n == 4) {
    FamilyCandidate c = qb(highdim_quadric_degree("thm5.8-3", 4), "thm5.8-3", "Theorem 5.8(3)");
    c.notes = "hyperplane section of the (5,5) case; printed H^5 = 4 conflicts with the degree kept by a hyperplane section";
    out.push_back(c);

    const TowerConstruction& t6 = construction_by_citation("Proposition 5.5");
    FamilyCandidate x6 = qb(model_degree(t6.tower), std::nullopt, t6.citation);
    x6.excluded = true;
    x6.reason = "(n,d) = (4,6) does not occur: the resolution is crepant and divisorial";
    x6.computed = {{"degree_tower", x6.degree}};
    out.push_back(x6);

    const TowerConstruction& t5 = construction_by_citation("Theorem 5.7");
    FamilyCandidate x5 = qb(model_degree(t5.tower), std::nullopt, t5.citation);
    x5.excluded = true;
    x5.reason = "sub-case 9.14(6) of (4,5): X' neither terminal nor Q-factorial";
    x5.computed = {{"degree_tower", x5.degree}};
    out.push_back(x5);
  }

  // Point blow-up chains on top of every admitted candidate and the Fano hypersurface cases.
  struct Base {
    std::string label;
    std::int64_t degree;
    int picard;
  };
  std::vector<Base> bases;
  for (const auto& c : out) {
    if (c.excluded) continue;
    bases.push_back({c.family_id ? *c.family_id : describe(c.construction), c.degree, c.picard});
  }
  for (const auto& r : builtin_catalog())
    if (r.id.rfind("prop5.1-", 0) == 0 && r.degree <= 4) bases.push_back({r.id, r.degree, r.picard});

  for (const auto& [label, d0, rho] : bases) {
    std::int64_t d = d0;
    for (int r = 1;; ++r) {
      const BlowupStep step = blowup_degree(n, d);
      if (!step.valid) break;
      FamilyCandidate c;
      c.construction = PointBlowupChain{label, d0, r};
      c.degree = step.degree;
      c.dim = n;
      c.picard = rho + r;
      c.citation = "Theorem 5.9";
      c.spanned = step.degree != 1;
      c.computed = {{"base_degree", d0}, {"points", r}};
      out.push_back(std::move(c));
      d = step.degree;
    }
  }
  return out;
}

}  // namespace adp
