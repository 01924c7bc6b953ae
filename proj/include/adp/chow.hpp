#pragma once

// Exact Chow-ring arithmetic on projectivized split (or Chern-data) bundles
// over a closed set of rational bases.
//
// An element lives on an Ambient and is kept in normal form: every base
// monomial is reduced by the base relations and every power of the
// tautological class z is below the rank (the Grothendieck relation
// z^r = c1 z^(r-1) - c2 z^(r-2) + ... is used to rewrite higher powers).

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adp {

enum class BaseKind { P1, P2, P1xP1, Hirzebruch, P1xP2 };

// Exponent vector: slots 0 and 1 hold base generators (slot 1 unused on
// single-generator bases), slot 2 holds z. Lexicographic order puts z last.
struct Monomial {
  std::array<int, 3> exps{0, 0, 0};

  int degree() const { return exps[0] + exps[1] + exps[2]; }
  int zeta() const { return exps[2]; }
  auto operator<=>(const Monomial&) const = default;
};

class BaseRing {
 public:
  static BaseRing p1();
  static BaseRing p2();
  static BaseRing p1xp1();
  static BaseRing hirzebruch(int e);
  static BaseRing p1xp2();

  BaseKind kind() const { return kind_; }
  int e() const { return e_; }
  int dim() const;
  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::string name() const;

  // Reduces the base part of m (slots 0,1) to normal form. Returns the
  // multiplier and reduced monomial, or nullopt if the class vanishes.
  std::optional<std::pair<std::int64_t, Monomial>> reduce(Monomial m) const;

  // Base monomial integrating to 1.
  Monomial point() const;

  // Canonical class as coefficients over the generators.
  std::array<std::int64_t, 2> canonical() const;

  bool operator==(const BaseRing&) const = default;

 private:
  BaseRing(BaseKind kind, int e, std::vector<std::string> names)
      : kind_(kind), e_(e), names_(std::move(names)) {}

  BaseKind kind_;
  int e_ = 0;
  std::vector<std::string> names_;
};

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

class ChowElement {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  // Normalizes the given terms. Mixed-degree input is rejected.
  static ChowElement from_terms(AmbientPtr ambient, const Terms& terms, int grade);
  static ChowElement zero(AmbientPtr ambient, int grade);
  static ChowElement one(AmbientPtr ambient);
  // Base generator by name ("h", "p", "F", "f1", "f2", "C0", "f") or "z".
  static ChowElement generator(AmbientPtr ambient, std::string_view name);

  const AmbientPtr& ambient() const { return ambient_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Monomial& m) const;

  ChowElement operator+(const ChowElement& o) const;
  ChowElement operator-(const ChowElement& o) const;
  ChowElement operator-() const;
  ChowElement operator*(const ChowElement& o) const;
  ChowElement pow(int k) const;
  friend ChowElement operator*(std::int64_t s, const ChowElement& x);

  bool operator==(const ChowElement& o) const;

  // Deterministic rendering: terms in descending monomial order,
  // e.g. "-p - h - 3*z".
  std::string to_string() const;

 private:
  ChowElement(AmbientPtr a, int grade, Terms t) : ambient_(std::move(a)), grade_(grade), terms_(std::move(t)) {}
  void require_same_ambient(const ChowElement& o, const char* op) const;

  AmbientPtr ambient_;
  int grade_ = 0;
  Terms terms_;
};

class Ambient {
 public:
  const BaseRing& base() const { return base_; }
  int rank() const { return rank_; }
  int dim() const { return base_.dim() + rank_ - 1; }
  bool is_tower() const { return rank_ >= 2; }

  // Chern classes c_1..c_rank of V as base classes (terms with z = 0),
  // truncated at the base dimension.
  const std::vector<ChowElement::Terms>& chern() const { return chern_; }
  // Line-bundle summands when the tower was built from twists.
  const std::vector<ChowElement>& twists() const { return twists_; }

  std::string describe() const;
  bool same_as(const Ambient& o) const;

 private:
  friend AmbientPtr make_base(const BaseRing& base);
  friend AmbientPtr make_tower(const BaseRing& base, std::span<const ChowElement> twists);
  friend AmbientPtr make_tower_from_chern(const BaseRing& base, int rank, std::span<const ChowElement> chern);

  Ambient(BaseRing base, int rank) : base_(std::move(base)), rank_(rank) {}

  BaseRing base_;
  int rank_ = 1;
  std::vector<ChowElement::Terms> chern_;
  std::vector<ChowElement> twists_;
};

// The base itself (rank 1, no z).
AmbientPtr make_base(const BaseRing& base);

// P(O(L_1) + ... + O(L_r)) over base. Every twist must be a degree-1 class
// on a make_base() ambient of the same base ring.
AmbientPtr make_tower(const BaseRing& base, std::span<const ChowElement> twists);
inline AmbientPtr make_tower(const BaseRing& base, std::initializer_list<ChowElement> twists) {
  return make_tower(base, std::span<const ChowElement>(twists.begin(), twists.size()));
}

// P(V) for a bundle V of the given rank with prescribed Chern classes
// (chern[i] is c_{i+1}, a class of grade i+1 on the base).
AmbientPtr make_tower_from_chern(const BaseRing& base, int rank, std::span<const ChowElement> chern);
inline AmbientPtr make_tower_from_chern(const BaseRing& base, int rank, std::initializer_list<ChowElement> chern) {
  return make_tower_from_chern(base, rank, std::span<const ChowElement>(chern.begin(), chern.size()));
}

// Pulls a class on the base ambient back to a tower over the same base.
ChowElement pullback(const AmbientPtr& tower, const ChowElement& base_class);

// Class of a point on the base ambient.
ChowElement point_class(const AmbientPtr& base);

ChowElement mul(const ChowElement& a, const ChowElement& b);

// Degree of a top-degree class. Any other grade is rejected.
std::int64_t integrate(const ChowElement& x);

// K = -r z + pi^*(K_base + c1(V)); on a rank-1 ambient just K_base.
ChowElement canonical_class(const AmbientPtr& a);

// K_A + X, the class restricting to K_X on a smooth member X.
ChowElement adjunction(const AmbientPtr& a, const ChowElement& x);

// Integral of H^n . X with n = dim(A) - 1.
std::int64_t polarized_degree(const AmbientPtr& a, const ChowElement& x, const ChowElement& h);

}  // namespace adp
