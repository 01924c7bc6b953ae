#pragma once

// Brute-force reference for top-degree integrals: repeatedly substitute the
// defining relations, in a random order, until nothing applies.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Exps = std::array<int, 3>;  // g0, g1, z
using Poly = std::map<Exps, std::int64_t>;

struct Rule {
  Exps lead;
  Poly tail;  // lead == tail in the ring
};

inline void add(Poly& p, const Exps& m, std::int64_t c) {
  if (c == 0) return;
  auto& v = p[m];
  v += c;
  if (v == 0) p.erase(m);
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add(out, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return out;
}

inline bool divides(const Exps& d, const Exps& m) { return d[0] <= m[0] && d[1] <= m[1] && d[2] <= m[2]; }

inline Poly reduce(Poly p, const std::vector<Rule>& rules, std::mt19937& rng) {
  for (int guard = 0; guard < 1000000; ++guard) {
    std::vector<std::pair<Exps, std::size_t>> moves;
    for (const auto& [m, c] : p)
      for (std::size_t i = 0; i < rules.size(); ++i)
        if (divides(rules[i].lead, m)) moves.push_back({m, i});
    if (moves.empty()) return p;
    const auto [m, ri] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    const std::int64_t c = p.at(m);
    p.erase(m);
    const Rule& r = rules[ri];
    const Exps q{m[0] - r.lead[0], m[1] - r.lead[1], m[2] - r.lead[2]};
    for (const auto& [t, tc] : r.tail) add(p, {q[0] + t[0], q[1] + t[1], q[2] + t[2]}, c * tc);
  }
  throw std::runtime_error("oracle: substitution did not terminate");
}

enum class Base { P1, P2, P1xP1, Fe, P1xP2 };

struct Ring {
  Base base = Base::P2;
  int e = 0;
  int rank = 1;
  std::vector<Rule> rules;
  Exps top{0, 0, 0};
};

inline std::vector<Rule> base_rules(Base b, int e) {
  switch (b) {
    case Base::P1: return {{{2, 0, 0}, {}}};
    case Base::P2: return {{{3, 0, 0}, {}}};
    case Base::P1xP1: return {{{2, 0, 0}, {}}, {{0, 2, 0}, {}}};
    case Base::Fe: return {{{0, 2, 0}, {}}, {{2, 0, 0}, {{{1, 1, 0}, -e}}}};
    case Base::P1xP2: return {{{2, 0, 0}, {}}, {{0, 3, 0}, {}}};
  }
  return {};
}

inline Exps base_point(Base b) {
  switch (b) {
    case Base::P1: return {1, 0, 0};
    case Base::P2: return {2, 0, 0};
    case Base::P1xP1:
    case Base::Fe: return {1, 1, 0};
    case Base::P1xP2: return {1, 2, 0};
  }
  return {0, 0, 0};
}

// chern[i] = c_{i+1} as a base polynomial.
inline Ring tower_from_chern(Base b, int e, int rank, const std::vector<Poly>& chern) {
  Ring r{b, e, rank, base_rules(b, e), base_point(b)};
  if (rank >= 2) {
    Rule z{{0, 0, rank}, {}};
    for (int i = 1; i <= rank && i <= static_cast<int>(chern.size()); ++i) {
      const std::int64_t sign = (i % 2 == 1) ? 1 : -1;  // (-1)^(i+1)
      for (const auto& [m, c] : chern[i - 1]) add(z.tail, {m[0], m[1], rank - i}, sign * c);
    }
    r.rules.push_back(z);
    r.top[2] = rank - 1;
  }
  return r;
}

// Twists as linear forms (a, b) on the base generators.
inline Ring tower_from_twists(Base b, int e, const std::vector<std::array<std::int64_t, 2>>& twists) {
  Poly total{{{0, 0, 0}, 1}};
  for (const auto& t : twists) {
    Poly f{{{0, 0, 0}, 1}};
    add(f, {1, 0, 0}, t[0]);
    add(f, {0, 1, 0}, t[1]);
    total = times(total, f);
  }
  std::vector<Poly> chern(twists.size());
  for (const auto& [m, c] : total) {
    const int d = m[0] + m[1];
    if (d >= 1) add(chern[d - 1], m, c);
  }
  return tower_from_chern(b, e, static_cast<int>(twists.size()), chern);
}

inline Ring base_ring(Base b, int e) { return tower_from_chern(b, e, 1, {}); }

inline std::int64_t integrate(const Ring& r, const Poly& p, std::mt19937& rng) {
  const Poly nf = reduce(p, r.rules, rng);
  std::int64_t value = 0;
  for (const auto& [m, c] : nf) {
    if (m != r.top) throw std::runtime_error("oracle: normal form has a non-point top monomial");
    value = c;
  }
  return value;
}

}  // namespace oracle
