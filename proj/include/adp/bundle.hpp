#pragma once

// Closed-form bundle arithmetic: sections of split bundles on P1,
// Riemann-Roch for rank-2 bundles on rational surfaces, twists, and the
// degree bookkeeping of point blow-ups.

#include <cstdint>
#include <string>
#include <vector>

#include "adp/chow.hpp"

namespace adp {

// O(a_1) + ... + O(a_r) on P1, stored with a_1 <= ... <= a_r.
class SplitBundle {
 public:
  explicit SplitBundle(std::vector<int> a);

  const std::vector<int>& entries() const { return a_; }
  int rank() const { return static_cast<int>(a_.size()); }
  std::int64_t degree() const;
  std::string to_string() const;  // "(0,0,1,1)"

  auto operator<=>(const SplitBundle&) const = default;

 private:
  std::vector<int> a_;
};

std::int64_t h0_split(const SplitBundle& e);
std::int64_t h1_split(const SplitBundle& e);

// Chern data (c1, c2) of a rank-2 bundle on P2, P1xP1 or a Hirzebruch
// surface. c1 is a divisor class on a make_base() ambient.
struct Rank2Data {
  AmbientPtr surface;
  ChowElement c1;
  std::int64_t c2 = 0;
};

Rank2Data make_rank2(const AmbientPtr& surface, const ChowElement& c1, std::int64_t c2);

// c1^2 - c2, the degree of the tautological class on P(F).
std::int64_t rank2_degree(const Rank2Data& d);

// chi(F) = 2 chi(O_S) + (c1^2 - c1.K_S)/2 - c2 with chi(O_S) = 1.
// Throws std::logic_error if the halved term is not integral.
std::int64_t chi_rank2(const Rank2Data& d);

// A section count obtained from chi; the flag records that h^q = 0 for
// q >= 1 was assumed, not proved.
struct SectionCount {
  std::int64_t value = 0;
  bool assumes_higher_vanishing = false;
};
SectionCount h0_from_chi(const Rank2Data& d);

// F(M): c1' = c1 + 2M, c2' = c2 + c1.M + M^2.
Rank2Data twist_rank2(const Rank2Data& d, const ChowElement& m);

// P(F) as a chow-engine tower.
AmbientPtr projectivize(const Rank2Data& d);

struct BlowupStep {
  std::int64_t degree = 0;       // d - 1
  bool valid = false;            // d - 1 > 0, i.e. the blow-up stays big
  bool general_point_ok = false; // n = 3: blowing up a general point needs d >= 2
};

// Degree after blowing up a general point of an n-fold of degree d.
BlowupStep blowup_degree(int n, std::int64_t d);

// Number of successive admissible point blow-ups starting from degree d.
int blowup_chain_length(int n, std::int64_t d);

}  // namespace adp
