#include "adp/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "adp/bundle.hpp"
#include "adp/checked.hpp"
#include "adp/enumerate.hpp"

namespace adp {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

void Report::append(const Report& o) {
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

void Report::expect(std::string name, std::string subject, const std::string& expected, const std::string& computed,
                    std::string citation, std::string reason) {
  checks.push_back(Check{std::move(name), std::move(subject), expected, computed,
                         expected == computed ? CheckStatus::Pass : CheckStatus::Fail, std::move(reason),
                         std::move(citation)});
}

void Report::expect(std::string name, std::string subject, long long expected, long long computed,
                    std::string citation, std::string reason) {
  expect(std::move(name), std::move(subject), std::to_string(expected), std::to_string(computed),
         std::move(citation), std::move(reason));
}

void Report::skip(std::string name, std::string subject, std::string reason, std::string citation) {
  checks.push_back(Check{std::move(name), std::move(subject), "", "", CheckStatus::Skipped, std::move(reason),
                         std::move(citation)});
}

void Report::fail(std::string name, std::string subject, std::string reason, std::string citation) {
  checks.push_back(Check{std::move(name), std::move(subject), "", "", CheckStatus::Fail, std::move(reason),
                         std::move(citation)});
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["subject"] = c.subject;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["status"] = to_string(c.status);
    if (!c.reason.empty()) e["reason"] = c.reason;
    e["citation"] = c.citation;
    j["checks"].push_back(e);
  }
  j["notes"] = r.notes;
  j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                  {"fail", r.count(CheckStatus::Fail)},
                  {"skipped", r.count(CheckStatus::Skipped)}};
  return j;
}

void write_report_text(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    os << status << ' ' << c.name << ' ' << c.subject;
    if (c.status != CheckStatus::Skipped && (!c.expected.empty() || !c.computed.empty())) {
      os << " expected=" << c.expected << " computed=" << c.computed;
    }
    if (!c.reason.empty()) os << " (" << c.reason << ')';
    if (!c.citation.empty()) os << " [" << c.citation << ']';
    os << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  os << "summary: " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
     << r.count(CheckStatus::Skipped) << " skipped\n";
}

namespace {

bool is_small_threefold(const FamilyRecord& r) {
  return r.anticanonical_map == AnticanonicalMap::Small && r.picard == 2 && r.dim == 3;
}

std::optional<FamilyRecord> by_id(const std::vector<FamilyRecord>& catalog, const std::string& id) {
  for (const auto& r : catalog)
    if (r.id == id) return r;
  return std::nullopt;
}

std::optional<std::int64_t> line_bundle_h0(const BaseRing& b, std::int64_t x, std::int64_t y) {
  switch (b.kind()) {
    case BaseKind::P1: return std::max<std::int64_t>(x + 1, 0);
    case BaseKind::P2: return x < 0 ? 0 : (x + 1) * (x + 2) / 2;
    case BaseKind::P1xP1: return (x < 0 || y < 0) ? 0 : (x + 1) * (y + 1);
    case BaseKind::P1xP2: return (x < 0 || y < 0) ? 0 : (x + 1) * (y + 1) * (y + 2) / 2;
    case BaseKind::Hirzebruch: return std::nullopt;
  }
  return std::nullopt;
}

ClassSpec scaled(const ClassSpec& c, std::int64_t s) {
  return ClassSpec{checked_mul(c.z, s), {checked_mul(c.base[0], s), checked_mul(c.base[1], s)}};
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

std::int64_t binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Degree of Gr(k, n) in the Pluecker embedding.
std::int64_t grassmannian_degree(int k, int n) {
  std::int64_t num = factorial(k * (n - k));
  std::int64_t den = 1;
  for (int i = 0; i < k; ++i) {
    num = checked_mul(num, factorial(i));
    den = checked_mul(den, factorial(n - k + i));
  }
  return num / den;
}

struct H0 {
  std::int64_t value;
  std::string method;
  std::string caveat;
};

std::optional<H0> h0_of(const FamilyRecord& r, const std::vector<FamilyRecord>& catalog, int depth = 0) {
  if (depth > 4) return std::nullopt;
  const FamilyModel& model = model_for(r.id);
  if (const auto* m = std::get_if<TowerModel>(&model)) {
    if (m->pushforward) return H0{h0_split(SplitBundle(*m->pushforward)), "h0_split", ""};
    if (!m->cuts.empty() || m->polarization.z != 1) return std::nullopt;
    const BaseRing br = base_ring(*m);
    if (!m->twists.empty()) {
      std::int64_t s = 0;
      for (const auto& t : m->twists) {
        const auto h = line_bundle_h0(br, t[0] + m->polarization.base[0], t[1] + m->polarization.base[1]);
        if (!h) return std::nullopt;
        s = checked_add(s, *h);
      }
      return H0{s, "split sections", ""};
    }
    if (m->rank != 2 || br.dim() != 2) return std::nullopt;
    const AmbientPtr s = make_base(br);
    const Rank2Data f = make_rank2(s, realize(s, ClassSpec{0, m->c1}), m->c2);
    const Rank2Data g = twist_rank2(f, realize(s, ClassSpec{0, m->polarization.base}));
    const SectionCount c = h0_from_chi(g);
    return H0{c.value, "riemann-roch", c.assumes_higher_vanishing ? "assumes higher cohomology vanishes" : ""};
  }
  if (const auto* w = std::get_if<WeightedModel>(&model)) {
    if (std::any_of(w->degrees.begin(), w->degrees.end(), [](int d) { return d < 2; })) return std::nullopt;
    return H0{std::count(w->weights.begin(), w->weights.end(), 1), "weight-one variables", ""};
  }
  if (const auto* g = std::get_if<GrassmannianModel>(&model)) {
    const int codim = g->k * (g->n - g->k) - r.dim;
    return H0{binomial(g->n, g->k) - codim, "pluecker sections", ""};
  }
  if (const auto* b = std::get_if<BlowupModel>(&model)) {
    const auto base = by_id(catalog, b->base_id);
    if (!base) return std::nullopt;
    const auto h = h0_of(*base, catalog, depth + 1);
    if (!h) return std::nullopt;
    return H0{h->value - 1, "base sections minus one", h->caveat};
  }
  return std::nullopt;
}

void degree_and_index(Report& rep, const FamilyRecord& r, const std::vector<FamilyRecord>& catalog) {
  const FamilyModel& model = model_for(r.id);
  const std::string& cite = r.citation;

  if (const auto* m = std::get_if<TowerModel>(&model)) {
    rep.expect("degree", r.id, r.degree, model_degree(*m), cite, "tower " + base_ring(*m).name());
    rep.expect("model-dim", r.id, r.dim, model_dim(*m), cite);
    if (m->index_check) {
      const AmbientPtr a = realize(*m);
      const std::string want = realize(a, scaled(m->polarization, -r.index)).to_string();
      rep.expect("index", r.id, want, model_adjunction(a, *m).to_string(), cite, "K + cuts = -(index) H");
    } else {
      rep.skip("index", r.id, "model is birational to the family; canonical class not preserved", cite);
    }
  } else if (const auto* w = std::get_if<WeightedModel>(&model)) {
    std::int64_t num = 1, den = 1;
    for (int d : w->degrees) num = checked_mul(num, d);
    for (int x : w->weights) den = checked_mul(den, x);
    if (num % den != 0) {
      rep.fail("degree", r.id, "product of degrees not divisible by product of weights", cite);
    } else {
      rep.expect("degree", r.id, r.degree, num / den, cite, "weighted complete intersection");
    }
    rep.expect("model-dim", r.id, r.dim,
               static_cast<long long>(w->weights.size()) - 1 - static_cast<long long>(w->degrees.size()), cite);
    const int sw = std::accumulate(w->weights.begin(), w->weights.end(), 0);
    const int sd = std::accumulate(w->degrees.begin(), w->degrees.end(), 0);
    rep.expect("index", r.id, r.index, sw - sd, cite, "sum of weights minus sum of degrees");
  } else if (const auto* g = std::get_if<GrassmannianModel>(&model)) {
    const int full = g->k * (g->n - g->k);
    rep.expect("degree", r.id, r.degree, grassmannian_degree(g->k, g->n), cite, "linear section of Gr(2;5)");
    rep.expect("model-dim", r.id, "3.." + std::to_string(full),
               (r.dim >= 3 && r.dim <= full) ? "3.." + std::to_string(full) : std::to_string(r.dim), cite);
    rep.expect("index", r.id, r.index, g->n - (full - r.dim), cite, "index n minus codimension");
  } else if (const auto* b = std::get_if<BlowupModel>(&model)) {
    const auto base = by_id(catalog, b->base_id);
    if (!base) {
      rep.fail("degree", r.id, "blow-up base " + b->base_id + " not in catalog", cite);
      return;
    }
    if (base->degree <= 0) {
      rep.fail("degree", r.id, "blow-up base has non-positive degree", cite);
      return;
    }
    const BlowupStep step = blowup_degree(r.dim, base->degree);
    rep.expect("degree", r.id, r.degree, step.degree, cite, "blow-up of " + base->id);
    rep.expect("blowup-admissible", r.id, "true", (step.valid && step.general_point_ok) ? "true" : "false", cite);
    rep.expect("index", r.id, r.index, base->index, cite, "index of the blown-up base");
    rep.expect("model-dim", r.id, r.dim, base->dim, cite);
  } else {
    const auto& why = std::get<NoModel>(model).reason;
    rep.skip("degree", r.id, why, cite);
    rep.skip("index", r.id, why, cite);
  }
}

}  // namespace

Report verify_family(const FamilyRecord& r, const std::vector<FamilyRecord>& catalog) {
  Report rep;
  const std::string& cite = r.citation;
  degree_and_index(rep, r, catalog);
  rep.expect("index-definition", r.id, r.dim - 1, r.index, cite, "index = dim - 1");

  const auto h0 = h0_of(r, catalog);
  if (h0) {
    rep.expect("h0", r.id, r.degree + r.dim - 1, h0->value, cite, h0->method + (h0->caveat.empty() ? "" : "; " + h0->caveat));
  } else {
    rep.skip("h0", r.id, "no section count available for this model", cite);
  }

  if (is_small_threefold(r)) {
    const bool in = r.degree >= 1 && r.degree <= 5;
    rep.expect("degree-window", r.id, "1..5", in ? "1..5" : std::to_string(r.degree), "Corollary 3.3");
  } else {
    const bool in = r.degree >= 1 && r.degree <= 9;
    rep.expect("degree-window", r.id, "1..9", in ? "1..9" : std::to_string(r.degree), cite);
  }
  if (r.degree == 1) rep.skip("spanned", r.id, "|H| has a base point; global generation not modelled", cite);
  return rep;
}

Report verify_families(const std::vector<FamilyRecord>& catalog) {
  Report rep;
  for (const auto& r : catalog) rep.append(verify_family(r, catalog));
  return rep;
}

Report verify_flops(const std::vector<FamilyRecord>& catalog) {
  Report rep;
  const std::string cite = "Theorem 3.2";
  for (const auto& r : catalog) {
    if (is_small_threefold(r) && !r.flop_partner) {
      rep.fail("flop-partner-present", r.id, "small rho = 2 threefold without a flop partner", cite);
    }
    if (r.flop_partner) {
      const auto p = by_id(catalog, *r.flop_partner);
      if (!p) {
        rep.fail("flop-referential-integrity", r.id, "partner " + *r.flop_partner + " not in catalog", cite);
      } else {
        rep.expect("flop-symmetry", r.id, r.id, p->flop_partner.value_or("-"), cite);
        rep.expect("flop-degree", r.id, r.degree, p->degree, cite);
        rep.expect("flop-index", r.id, r.index, p->index, cite);
        rep.expect("flop-picard", r.id, r.picard, p->picard, cite);
      }
    }
    if (is_small_threefold(r) && r.degree <= 2) {
      rep.expect("flop-self-low-degree", r.id, r.id, r.flop_partner.value_or("-"), "Lemma 3.1");
    }
  }
  return rep;
}

Report verify_smoothings(const std::vector<FamilyRecord>& catalog) {
  Report rep;
  const std::string cite = "Theorem 3.2";
  for (const auto& r : catalog) {
    if (is_small_threefold(r) && !r.smoothing) {
      rep.fail("smoothing-present", r.id, "small rho = 2 threefold without a smoothing target", cite);
    }
    if (!r.smoothing) continue;
    const auto t = lookup(catalog, *r.smoothing);
    if (!t) {
      rep.fail("smoothing-referential-integrity", r.id, "target " + *r.smoothing + " not in catalog", cite);
      continue;
    }
    const bool fano = t->id.rfind("thm2.1-", 0) == 0 && t->anticanonical_map == AnticanonicalMap::Ample;
    rep.expect("smoothing-target-fano", r.id, "true", fano ? "true" : "false", cite);
    rep.expect("smoothing-degree", r.id, r.degree, t->degree, cite);
    rep.expect("smoothing-index", r.id, r.index, t->index, cite);
    rep.expect("smoothing-picard", r.id, r.picard - 1, t->picard, cite, "rho(X') = rho(X) - 1 for a small contraction");
    const bool in = t->degree >= 1 && t->degree <= 5;
    rep.expect("smoothing-degree-window", r.id, "1..5", in ? "1..5" : std::to_string(t->degree), "Corollary 3.3");
  }
  return rep;
}

Report verify_constructions() {
  Report rep;
  for (const auto& t : tower_constructions()) {
    const AmbientPtr a = realize(t.tower);
    rep.expect("construction-adjunction", t.name, realize(a, t.expected_adjunction).to_string(),
               model_adjunction(a, t.tower).to_string(), t.citation);
    rep.expect("construction-degree", t.name, t.expected_degree, model_degree(t.tower), t.citation);
    if (!t.note.empty()) rep.notes.push_back(t.name + ": " + t.note);
  }
  return rep;
}

namespace {

struct Enumerated {
  std::int64_t degree = 0;
  int dim = 3;
  std::optional<std::string> partner;
  std::optional<std::string> tuple;
};

void compare_sets(Report& rep, const std::string& label, const std::map<std::string, Enumerated>& found,
                  const std::vector<FamilyRecord>& catalog, const std::function<bool(const FamilyRecord&)>& pick,
                  const std::string& cite) {
  std::set<std::string> in_catalog;
  for (const auto& r : catalog) {
    if (!pick(r)) continue;
    in_catalog.insert(r.id);
    auto it = found.find(r.id);
    if (it == found.end()) {
      rep.fail("enumeration-" + label, r.id, "catalog record not produced by the enumeration", cite);
      continue;
    }
    rep.expect("enumeration-" + label + "-degree", r.id, r.degree, it->second.degree, cite);
    rep.expect("enumeration-" + label + "-dim", r.id, r.dim, it->second.dim, cite);
    if (it->second.partner) {
      rep.expect("enumeration-" + label + "-partner", r.id, *it->second.partner, r.flop_partner.value_or("-"), cite);
    }
    if (it->second.tuple) {
      const auto* m = std::get_if<TowerModel>(&model_for(r.id));
      const std::string model_tuple =
          (m && m->pushforward) ? SplitBundle(*m->pushforward).to_string() : std::string("-");
      rep.expect("enumeration-" + label + "-tuple", r.id, *it->second.tuple, model_tuple, cite);
    }
  }
  for (const auto& [id, e] : found) {
    if (!in_catalog.count(id)) rep.fail("enumeration-" + label, id, "enumerated family missing from catalog", cite);
  }
}

void collect(std::map<std::string, Enumerated>& out, const std::vector<FamilyCandidate>& cs) {
  for (const auto& c : cs) {
    if (c.excluded || !c.family_id || out.count(*c.family_id)) continue;
    out[*c.family_id] = Enumerated{c.degree, c.dim, c.flop_partner, std::nullopt};
  }
}

}  // namespace

Report verify_enumeration_matches_catalog(const std::vector<FamilyRecord>& catalog) {
  Report rep;
  {
    std::map<std::string, Enumerated> found;
    for (const auto& v : enumerate_quadric_fibrations()) {
      if (v.kind == VerdictKind::Small) found[v.family_id] = Enumerated{v.degree, 3, std::nullopt, v.tuple.to_string()};
    }
    compare_sets(rep, "quadric", found, catalog,
                 [](const FamilyRecord& r) {
                   return is_small_threefold(r) && r.contraction == Contraction::QuadricFibration;
                 },
                 "Theorem 3.4");
  }
  {
    std::map<std::string, Enumerated> found;
    collect(found, enumerate_p2_bundles());
    compare_sets(rep, "p2bundle", found, catalog,
                 [](const FamilyRecord& r) { return is_small_threefold(r) && r.contraction == Contraction::P1Bundle; },
                 "Theorem 3.5");
  }
  {
    std::map<std::string, Enumerated> found;
    collect(found, enumerate_point_blowups());
    compare_sets(rep, "blowup", found, catalog,
                 [](const FamilyRecord& r) {
                   return is_small_threefold(r) && r.contraction == Contraction::PointBlowup;
                 },
                 "Theorem 3.6");
  }
  for (const auto& [surface, tag] :
       std::vector<std::pair<BaseRing, std::string>>{{BaseRing::p1xp1(), "p1xp1"}, {BaseRing::hirzebruch(2), "f2"}}) {
    std::map<std::string, Enumerated> found;
    collect(found, enumerate_rho3(surface));
    const std::string prefix = "thm4.1-2-" + tag + "-";
    compare_sets(rep, "rho3-" + tag, found, catalog,
                 [&](const FamilyRecord& r) { return r.id.rfind(prefix, 0) == 0; }, "Theorem 4.1(2)");
  }
  {
    std::map<std::string, Enumerated> found;
    for (int n : {4, 5}) {
      std::vector<FamilyCandidate> qb;
      for (auto& c : enumerate_highdim(n))
        if (std::holds_alternative<QuadricBundleHighDim>(c.construction)) qb.push_back(c);
      collect(found, qb);
    }
    compare_sets(rep, "quadric-bundle", found, catalog,
                 [](const FamilyRecord& r) { return r.contraction == Contraction::QuadricBundle; }, "Theorem 5.8");
  }
  return rep;
}

const std::vector<std::string>& report_names() {
  static const std::vector<std::string> names{"families", "flops", "smoothings", "constructions", "enumeration"};
  return names;
}

Report verify_named(const std::string& name, const std::vector<FamilyRecord>& catalog) {
  if (name == "families") return verify_families(catalog);
  if (name == "flops") return verify_flops(catalog);
  if (name == "smoothings") return verify_smoothings(catalog);
  if (name == "constructions") return verify_constructions();
  if (name == "enumeration") return verify_enumeration_matches_catalog(catalog);
  throw std::invalid_argument("unknown report '" + name + "'");
}

Report verify_all(const std::vector<FamilyRecord>& catalog) {
  Report rep;
  for (const auto& n : report_names()) rep.append(verify_named(n, catalog));
  return rep;
}

std::vector<Mutation> mutation_sweep(const std::vector<FamilyRecord>& catalog) {
  std::vector<Mutation> out;
  auto edit = [](std::string id, std::function<void(FamilyRecord&)> f) {
    return [id, f](std::vector<FamilyRecord>& c) {
      for (auto& r : c)
        if (r.id == id) f(r);
    };
  };
  for (const auto& r : catalog) {
    const Report fam = verify_family(r, catalog);
    const bool checkable = std::any_of(fam.checks.begin(), fam.checks.end(), [](const Check& c) {
      return c.name == "degree" && c.status != CheckStatus::Skipped;
    });
    if (checkable) {
      out.push_back({r.id + " degree+1", edit(r.id, [](FamilyRecord& x) { ++x.degree; })});
      out.push_back({r.id + " degree-1", edit(r.id, [](FamilyRecord& x) { --x.degree; })});
    }
    if (r.flop_partner) {
      out.push_back({r.id + " drop flop_partner", edit(r.id, [](FamilyRecord& x) { x.flop_partner.reset(); })});
      out.push_back(
          {r.id + " flop_partner -> thm2.1-1", edit(r.id, [](FamilyRecord& x) { x.flop_partner = "thm2.1-1"; })});
    }
    if (r.smoothing) {
      const std::string wrong = "thm2.1-" + std::to_string(r.degree % 5 + 1);
      out.push_back({r.id + " drop smoothing", edit(r.id, [](FamilyRecord& x) { x.smoothing.reset(); })});
      out.push_back(
          {r.id + " smoothing -> " + wrong, edit(r.id, [wrong](FamilyRecord& x) { x.smoothing = wrong; })});
    }
  }
  return out;
}

}  // namespace adp
