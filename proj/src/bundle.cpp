#include "adp/bundle.hpp"

#include <algorithm>
#include <stdexcept>

#include "adp/checked.hpp"

namespace adp {

SplitBundle::SplitBundle(std::vector<int> a) : a_(std::move(a)) {
  if (a_.empty()) throw std::invalid_argument("split bundle needs rank >= 1");
  std::sort(a_.begin(), a_.end());
}

std::int64_t SplitBundle::degree() const {
  std::int64_t s = 0;
  for (int x : a_) s = checked_add(s, x);
  return s;
}

std::string SplitBundle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a_[i]);
  }
  return out + ")";
}

std::int64_t h0_split(const SplitBundle& e) {
  std::int64_t s = 0;
  for (int a : e.entries()) s = checked_add(s, std::max<std::int64_t>(std::int64_t{a} + 1, 0));
  return s;
}

std::int64_t h1_split(const SplitBundle& e) {
  std::int64_t s = 0;
  for (int a : e.entries()) s = checked_add(s, std::max<std::int64_t>(-std::int64_t{a} - 1, 0));
  return s;
}

Rank2Data make_rank2(const AmbientPtr& surface, const ChowElement& c1, std::int64_t c2) {
  if (!surface || surface->is_tower() || surface->base().dim() != 2) {
    throw std::invalid_argument("rank-2 data needs a surface (P2, P1xP1 or a Hirzebruch surface)");
  }
  if (c1.grade() != 1 || !c1.ambient() || c1.ambient()->is_tower() || !(c1.ambient()->base() == surface->base())) {
    throw std::invalid_argument("c1 must be a divisor class on " + surface->base().name());
  }
  return Rank2Data{surface, c1, c2};
}

namespace {

ChowElement surface_canonical(const Rank2Data& d) { return canonical_class(d.surface); }

void require_same_surface(const Rank2Data& d, const ChowElement& m) {
  if (m.grade() != 1 || !m.ambient() || m.ambient()->is_tower() || !(m.ambient()->base() == d.surface->base())) {
    throw std::invalid_argument("twist class does not live on " + d.surface->base().name());
  }
}

}  // namespace

std::int64_t rank2_degree(const Rank2Data& d) { return checked_sub(integrate(d.c1 * d.c1), d.c2); }

std::int64_t chi_rank2(const Rank2Data& d) {
  const std::int64_t num = checked_sub(integrate(d.c1 * d.c1), integrate(d.c1 * surface_canonical(d)));
  if (num % 2 != 0) {
    throw std::logic_error("chi_rank2: c1^2 - c1.K = " + std::to_string(num) + " is odd; c1 = " +
                           d.c1.to_string() + " is not a valid first Chern class");
  }
  return checked_sub(checked_add(2, num / 2), d.c2);
}

SectionCount h0_from_chi(const Rank2Data& d) { return SectionCount{chi_rank2(d), true}; }

Rank2Data twist_rank2(const Rank2Data& d, const ChowElement& m) {
  require_same_surface(d, m);
  const std::int64_t c2 = checked_add(checked_add(d.c2, integrate(d.c1 * m)), integrate(m * m));
  return Rank2Data{d.surface, d.c1 + 2 * m, c2};
}

AmbientPtr projectivize(const Rank2Data& d) {
  const ChowElement c2 = d.c2 * point_class(d.surface);
  return make_tower_from_chern(d.surface->base(), 2, {d.c1, c2});
}

BlowupStep blowup_degree(int n, std::int64_t d) {
  if (n < 3) throw std::invalid_argument("blowup_degree: dimension must be at least 3");
  if (d <= 0) throw std::invalid_argument("blowup_degree: degree must be positive, got " + std::to_string(d));
  BlowupStep s;
  s.degree = d - 1;
  s.valid = s.degree > 0;
  s.general_point_ok = d >= 2;
  return s;
}

int blowup_chain_length(int n, std::int64_t d) {
  int steps = 0;
  while (true) {
    const BlowupStep s = blowup_degree(n, d);
    if (!s.valid || !s.general_point_ok) break;
    ++steps;
    d = s.degree;
  }
  return steps;
}

}  // namespace adp
