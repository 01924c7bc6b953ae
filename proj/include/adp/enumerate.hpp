#pragma once

// Finite searches that rebuild the classification lists from their
// numerical constraints. Exclusions are returned as records, not dropped.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adp/bundle.hpp"
#include "adp/chow.hpp"

namespace adp {

enum class VerdictKind { Small, Divisorial, RejectedRange, RejectedGeometric };
std::string to_string(VerdictKind k);

// Quadric fibration X in |2z + alpha F| on F(a1,..,a4) = P(E) over P1.
struct TupleVerdict {
  SplitBundle tuple;
  std::int64_t alpha = 0;   // 2 - sum(a)
  std::int64_t degree = 0;  // sum(a) + 2
  VerdictKind kind = VerdictKind::RejectedRange;
  std::string family_id;  // Small only
  std::string reason;
  bool inferred = false;
};

TupleVerdict classify_tuple(const SplitBundle& e);

// Every non-decreasing 4-tuple with a1 >= -1 and sum <= 3, classified.
std::vector<TupleVerdict> enumerate_quadric_fibrations();

// --- candidates ------------------------------------------------------------

struct QuadricFibration {
  SplitBundle tuple{std::vector<int>{0, 0, 0, 0}};
  std::int64_t alpha = 0;
};
struct P1BundleP2 {
  std::int64_t c1 = -1;
  std::int64_t c2 = 0;
};
struct BlowupV2 {
  std::string base_id;
  std::int64_t base_degree = 0;
};
struct Rho3Bundle {
  BaseKind surface = BaseKind::P1xP1;
  std::int64_t c2 = 0;
  bool position_flag = false;  // two points of Z on a ruling line
};
// P(O^(n-3) + F') over a surface; F' normalized with c1(F') = -K_S.
struct PnBundle {
  int n = 4;
  std::string source;
  Rank2Data data;
};
struct QuadricBundleHighDim {
  int n = 4;
  std::int64_t d = 0;
};
struct PointBlowupChain {
  std::string base;
  std::int64_t base_degree = 0;
  int r = 1;
};

using Construction = std::variant<QuadricFibration, P1BundleP2, BlowupV2, Rho3Bundle, PnBundle,
                                  QuadricBundleHighDim, PointBlowupChain>;

struct FamilyCandidate {
  Construction construction;
  std::int64_t degree = 0;
  int dim = 3;
  int picard = 2;
  std::optional<std::string> family_id;
  std::optional<std::string> flop_partner;
  bool excluded = false;
  std::string reason;
  bool spanned = true;   // false when |H| has a base point (d = 1)
  bool source_omitted = false;
  std::string citation;
  std::string notes;
  // Named intermediate numbers (chi, recomputed c2, degree routes, ...).
  std::vector<std::pair<std::string, std::int64_t>> computed;

  std::optional<std::int64_t> value(const std::string& key) const;
};

std::string describe(const Construction& c);

std::vector<FamilyCandidate> enumerate_p2_bundles();
std::vector<FamilyCandidate> enumerate_point_blowups();
// surface must be P1xP1 or the Hirzebruch surface F2.
std::vector<FamilyCandidate> enumerate_rho3(const BaseRing& surface);
// n >= 4.
std::vector<FamilyCandidate> enumerate_highdim(int n);

}  // namespace adp
