#include "adp/chow.hpp"

#include <sstream>
#include <stdexcept>

#include "adp/checked.hpp"

namespace adp {

// ---------------------------------------------------------------------------
// BaseRing

BaseRing BaseRing::p1() { return BaseRing(BaseKind::P1, 0, {"F"}); }
BaseRing BaseRing::p2() { return BaseRing(BaseKind::P2, 0, {"h"}); }
BaseRing BaseRing::p1xp1() { return BaseRing(BaseKind::P1xP1, 0, {"f1", "f2"}); }
BaseRing BaseRing::p1xp2() { return BaseRing(BaseKind::P1xP2, 0, {"p", "h"}); }

BaseRing BaseRing::hirzebruch(int e) {
  if (e < 0) throw std::invalid_argument("hirzebruch surface needs e >= 0");
  return BaseRing(BaseKind::Hirzebruch, e, {"C0", "f"});
}

int BaseRing::dim() const {
  switch (kind_) {
    case BaseKind::P1: return 1;
    case BaseKind::P2:
    case BaseKind::P1xP1:
    case BaseKind::Hirzebruch: return 2;
    case BaseKind::P1xP2: return 3;
  }
  return 0;
}

std::string BaseRing::name() const {
  switch (kind_) {
    case BaseKind::P1: return "P1";
    case BaseKind::P2: return "P2";
    case BaseKind::P1xP1: return "P1xP1";
    case BaseKind::Hirzebruch: return "F" + std::to_string(e_);
    case BaseKind::P1xP2: return "P1xP2";
  }
  return "?";
}

std::optional<std::pair<std::int64_t, Monomial>> BaseRing::reduce(Monomial m) const {
  int& a = m.exps[0];
  int& b = m.exps[1];
  switch (kind_) {
    case BaseKind::P1:
      if (a > 1) return std::nullopt;
      break;
    case BaseKind::P2:
      if (a > 2) return std::nullopt;
      break;
    case BaseKind::P1xP1:
      if (a > 1 || b > 1) return std::nullopt;
      break;
    case BaseKind::P1xP2:
      if (a > 1 || b > 2) return std::nullopt;
      break;
    case BaseKind::Hirzebruch: {
      // f^2 = 0, C0^2 = -e C0 f.
      if (b > 1) return std::nullopt;
      if (a <= 1) break;
      if (a != 2 || b != 0 || e_ == 0) return std::nullopt;
      return std::make_pair(std::int64_t{-e_}, Monomial{{1, 1, m.exps[2]}});
    }
  }
  return std::make_pair(std::int64_t{1}, m);
}

Monomial BaseRing::point() const {
  switch (kind_) {
    case BaseKind::P1: return Monomial{{1, 0, 0}};
    case BaseKind::P2: return Monomial{{2, 0, 0}};
    case BaseKind::P1xP1:
    case BaseKind::Hirzebruch: return Monomial{{1, 1, 0}};
    case BaseKind::P1xP2: return Monomial{{1, 2, 0}};
  }
  return {};
}

std::array<std::int64_t, 2> BaseRing::canonical() const {
  switch (kind_) {
    case BaseKind::P1: return {-2, 0};
    case BaseKind::P2: return {-3, 0};
    case BaseKind::P1xP1: return {-2, -2};
    case BaseKind::Hirzebruch: return {-2, -(e_ + 2)};
    case BaseKind::P1xP2: return {-2, -3};
  }
  return {0, 0};
}

// ---------------------------------------------------------------------------
// normal form

namespace {

void add_term(ChowElement::Terms& t, const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) t.erase(it);
  }
}

void add_reduced(const BaseRing& base, ChowElement::Terms& t, const Monomial& m, std::int64_t c) {
  auto r = base.reduce(m);
  if (!r) return;
  add_term(t, r->second, checked_mul(c, r->first));
}

ChowElement::Terms normalize(const Ambient& a, const ChowElement::Terms& in) {
  ChowElement::Terms pending;
  for (const auto& [m, c] : in) add_reduced(a.base(), pending, m, c);
  const int r = a.rank();
  if (r < 2) return pending;

  // Rewrite the highest z-power first; every rewrite strictly lowers it.
  for (;;) {
    auto top = pending.end();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      if (it->first.zeta() >= r && (top == pending.end() || it->first.zeta() > top->first.zeta())) top = it;
    }
    if (top == pending.end()) break;
    const Monomial m = top->first;
    const std::int64_t c = top->second;
    pending.erase(top);
    for (int i = 1; i <= r; ++i) {
      const std::int64_t sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [bm, bc] : a.chern()[i - 1]) {
        Monomial nm{{m.exps[0] + bm.exps[0], m.exps[1] + bm.exps[1], m.exps[2] - i}};
        add_reduced(a.base(), pending, nm, checked_mul(sign, checked_mul(c, bc)));
      }
    }
  }
  return pending;
}

ChowElement::Terms multiply_terms(const Ambient& a, const ChowElement::Terms& x, const ChowElement::Terms& y) {
  ChowElement::Terms raw;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      Monomial m{{mx.exps[0] + my.exps[0], mx.exps[1] + my.exps[1], mx.exps[2] + my.exps[2]}};
      add_term(raw, m, checked_mul(cx, cy));
    }
  }
  return normalize(a, raw);
}

std::string render_monomial(const BaseRing& base, const Monomial& m) {
  std::string out;
  auto factor = [&out](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (int i = 0; i < base.num_generators(); ++i) factor(base.generator_names()[i], m.exps[i]);
  factor("z", m.exps[2]);
  return out;
}

std::string render_terms(const BaseRing& base, const ChowElement::Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const std::int64_t c = it->second;
    const std::string mono = render_monomial(base, it->first);
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ChowElement

ChowElement ChowElement::from_terms(AmbientPtr ambient, const Terms& terms, int grade) {
  if (!ambient) throw std::invalid_argument("chow element needs an ambient");
  if (grade < 0) throw std::invalid_argument("negative grade");
  const int ngen = ambient->base().num_generators();
  for (const auto& [m, c] : terms) {
    if (c == 0) continue;
    for (int e : m.exps)
      if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    if (ngen < 2 && m.exps[1] != 0) throw std::invalid_argument("monomial uses a generator the base does not have");
    if (!ambient->is_tower() && m.exps[2] != 0) throw std::invalid_argument("z is not defined on a plain base");
    if (m.degree() != grade) {
      throw std::invalid_argument("mixed-degree input: monomial of degree " + std::to_string(m.degree()) +
                                  " in an element of grade " + std::to_string(grade));
    }
  }
  Terms normal = normalize(*ambient, terms);
  return ChowElement(std::move(ambient), grade, std::move(normal));
}

ChowElement ChowElement::zero(AmbientPtr ambient, int grade) { return from_terms(std::move(ambient), {}, grade); }

ChowElement ChowElement::one(AmbientPtr ambient) { return from_terms(std::move(ambient), {{Monomial{}, 1}}, 0); }

ChowElement ChowElement::generator(AmbientPtr ambient, std::string_view name) {
  if (!ambient) throw std::invalid_argument("chow element needs an ambient");
  Monomial m;
  if (name == "z") {
    if (!ambient->is_tower()) throw std::invalid_argument("z is not defined on a plain base");
    m.exps[2] = 1;
  } else {
    const auto& names = ambient->base().generator_names();
    int slot = -1;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == name) slot = i;
    if (slot < 0) {
      throw std::invalid_argument("unknown generator '" + std::string(name) + "' on " + ambient->base().name());
    }
    m.exps[slot] = 1;
  }
  return from_terms(std::move(ambient), {{m, 1}}, 1);
}

std::int64_t ChowElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void ChowElement::require_same_ambient(const ChowElement& o, const char* op) const {
  if (ambient_ == o.ambient_) return;
  if (!ambient_ || !o.ambient_ || !ambient_->same_as(*o.ambient_)) {
    throw std::invalid_argument(std::string("ambient mismatch in ") + op + ": " +
                                (ambient_ ? ambient_->describe() : "null") + " vs " +
                                (o.ambient_ ? o.ambient_->describe() : "null"));
  }
}

ChowElement ChowElement::operator+(const ChowElement& o) const {
  require_same_ambient(o, "addition");
  if (grade_ != o.grade_) {
    throw std::invalid_argument("mixed-degree sum: grade " + std::to_string(grade_) + " + grade " +
                                std::to_string(o.grade_));
  }
  Terms t = terms_;
  for (const auto& [m, c] : o.terms_) add_term(t, m, c);
  return ChowElement(ambient_, grade_, std::move(t));
}

ChowElement ChowElement::operator-() const {
  Terms t;
  for (const auto& [m, c] : terms_) t.emplace(m, checked_mul(-1, c));
  return ChowElement(ambient_, grade_, std::move(t));
}

ChowElement ChowElement::operator-(const ChowElement& o) const { return *this + (-o); }

ChowElement ChowElement::operator*(const ChowElement& o) const { return mul(*this, o); }

ChowElement operator*(std::int64_t s, const ChowElement& x) {
  ChowElement::Terms t;
  if (s != 0)
    for (const auto& [m, c] : x.terms_) t.emplace(m, checked_mul(s, c));
  return ChowElement(x.ambient_, x.grade_, std::move(t));
}

ChowElement ChowElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  ChowElement r = one(ambient_);
  for (int i = 0; i < k; ++i) r = mul(r, *this);
  return r;
}

bool ChowElement::operator==(const ChowElement& o) const {
  if (grade_ != o.grade_ || terms_ != o.terms_) return false;
  if (ambient_ == o.ambient_) return true;
  return ambient_ && o.ambient_ && ambient_->same_as(*o.ambient_);
}

std::string ChowElement::to_string() const { return render_terms(ambient_->base(), terms_); }

// ---------------------------------------------------------------------------
// Ambient

bool Ambient::same_as(const Ambient& o) const {
  return base_ == o.base_ && rank_ == o.rank_ && chern_ == o.chern_;
}

std::string Ambient::describe() const {
  if (!is_tower()) return base_.name();
  std::ostringstream os;
  os << "P(";
  if (!twists_.empty()) {
    for (std::size_t i = 0; i < twists_.size(); ++i) {
      if (i) os << " + ";
      os << "O";
      if (!twists_[i].is_zero()) os << "(" << twists_[i].to_string() << ")";
    }
  } else {
    os << "V";
  }
  os << ") over " << base_.name() << ", rank " << rank_;
  for (std::size_t i = 0; i < chern_.size(); ++i) {
    if (chern_[i].empty()) continue;
    os << ", c" << i + 1 << " = " << render_terms(base_, chern_[i]);
  }
  return os.str();
}

AmbientPtr make_base(const BaseRing& base) {
  return AmbientPtr(new Ambient(base, 1));
}

namespace {

void check_base_class(const BaseRing& base, const ChowElement& c, int grade, const char* what) {
  if (!c.ambient() || c.ambient()->is_tower() || !(c.ambient()->base() == base)) {
    throw std::invalid_argument(std::string(what) + " does not live on base " + base.name() +
                                (c.ambient() ? " (found " + c.ambient()->describe() + ")" : ""));
  }
  if (c.grade() != grade) {
    throw std::invalid_argument(std::string(what) + " must have grade " + std::to_string(grade) + ", got " +
                                std::to_string(c.grade()));
  }
}

}  // namespace

AmbientPtr make_tower(const BaseRing& base, std::span<const ChowElement> twists) {
  if (twists.empty()) throw std::invalid_argument("make_tower: empty twist list");
  if (twists.size() < 2) throw std::invalid_argument("make_tower: rank must be at least 2 (use make_base for the base)");
  for (const auto& t : twists) check_base_class(base, t, 1, "twist");

  // c(V) = prod (1 + L_i), graded pieces collected by degree.
  const auto& bamb = twists.front().ambient();
  const int r = static_cast<int>(twists.size());
  std::vector<ChowElement> c;
  c.push_back(ChowElement::one(bamb));
  for (int i = 1; i <= r; ++i) c.push_back(ChowElement::zero(bamb, i));
  for (const auto& t : twists) {
    for (int k = r; k >= 1; --k) c[k] = c[k] + c[k - 1] * t;
  }
  auto* amb = new Ambient(base, r);
  AmbientPtr out(amb);
  for (int k = 1; k <= r; ++k) amb->chern_.push_back(c[k].terms());
  amb->twists_.assign(twists.begin(), twists.end());
  return out;
}

AmbientPtr make_tower_from_chern(const BaseRing& base, int rank, std::span<const ChowElement> chern) {
  if (rank < 2) throw std::invalid_argument("make_tower_from_chern: rank must be at least 2");
  if (static_cast<int>(chern.size()) > rank) throw std::invalid_argument("more Chern classes than the rank");
  auto* amb = new Ambient(base, rank);
  AmbientPtr out(amb);
  for (int i = 0; i < rank; ++i) {
    if (i < static_cast<int>(chern.size())) {
      check_base_class(base, chern[i], i + 1, "chern class");
      amb->chern_.push_back(chern[i].terms());
    } else {
      amb->chern_.emplace_back();
    }
  }
  return out;
}

ChowElement pullback(const AmbientPtr& tower, const ChowElement& base_class) {
  check_base_class(tower->base(), base_class, base_class.grade(), "pulled-back class");
  return ChowElement::from_terms(tower, base_class.terms(), base_class.grade());
}

ChowElement point_class(const AmbientPtr& base) {
  if (base->is_tower()) throw std::invalid_argument("point_class expects a plain base");
  const Monomial p = base->base().point();
  return ChowElement::from_terms(base, {{p, 1}}, p.degree());
}

// ---------------------------------------------------------------------------
// operations

ChowElement mul(const ChowElement& a, const ChowElement& b) {
  if (a.ambient() != b.ambient() && !a.ambient()->same_as(*b.ambient())) {
    throw std::invalid_argument("ambient mismatch in product: " + a.ambient()->describe() + " vs " +
                                b.ambient()->describe());
  }
  auto t = multiply_terms(*a.ambient(), a.terms(), b.terms());
  return ChowElement::from_terms(a.ambient(), t, a.grade() + b.grade());
}

std::int64_t integrate(const ChowElement& x) {
  const Ambient& a = *x.ambient();
  if (x.grade() != a.dim()) {
    throw std::invalid_argument("integrate: class of grade " + std::to_string(x.grade()) +
                                " is not top-degree on " + a.describe() + " (dim " + std::to_string(a.dim()) + ")");
  }
  Monomial top = a.base().point();
  top.exps[2] = a.rank() - 1;
  for (const auto& [m, c] : x.terms()) {
    if (!(m == top)) throw std::logic_error("integrate: top-degree normal form has a stray monomial");
  }
  return x.coefficient(top);
}

ChowElement canonical_class(const AmbientPtr& a) {
  const auto kb = a->base().canonical();
  ChowElement::Terms t;
  for (int i = 0; i < a->base().num_generators(); ++i) {
    Monomial m;
    m.exps[i] = 1;
    t[m] = kb[i];
  }
  ChowElement k = ChowElement::from_terms(a, t, 1);
  if (!a->is_tower()) return k;
  ChowElement c1 = ChowElement::from_terms(a, a->chern()[0], 1);
  return k + c1 - a->rank() * ChowElement::generator(a, "z");
}

ChowElement adjunction(const AmbientPtr& a, const ChowElement& x) {
  if (x.grade() != 1) throw std::invalid_argument("adjunction expects a divisor class (grade 1)");
  return canonical_class(a) + x;
}

std::int64_t polarized_degree(const AmbientPtr& a, const ChowElement& x, const ChowElement& h) {
  if (x.grade() != 1 || h.grade() != 1) throw std::invalid_argument("polarized_degree expects divisor classes");
  return integrate(h.pow(a->dim() - 1) * x);
}

}  // namespace adp
