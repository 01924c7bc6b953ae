#pragma once

// Compiled-in table of every classified family, plus the construction data
// (ambient towers, weighted embeddings, blow-up bases) that lets the
// verifier recompute each family's invariants.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adp/chow.hpp"
#include "json.hpp"

namespace adp {

enum class Contraction { QuadricFibration, P1Bundle, PnBundle, QuadricBundle, PointBlowup, Fano };
enum class AnticanonicalMap { Ample, Small, Divisorial };

std::string to_string(Contraction c);
std::string to_string(AnticanonicalMap a);
Contraction contraction_from_string(std::string_view s);
AnticanonicalMap anticanonical_map_from_string(std::string_view s);

struct FamilyRecord {
  std::string id;
  int dim = 0;
  int degree = 0;
  int picard = 0;
  int index = 0;
  Contraction contraction = Contraction::Fano;
  AnticanonicalMap anticanonical_map = AnticanonicalMap::Ample;
  std::optional<std::string> flop_partner;
  std::optional<std::string> smoothing;
  std::string citation;
  std::string notes;

  bool operator==(const FamilyRecord&) const = default;
};

// Sorted by id; immutable.
const std::vector<FamilyRecord>& builtin_catalog();

// Exact id, or an alias such as "V_{2,4}". nullopt when unknown.
std::optional<FamilyRecord> lookup(std::string_view id);
std::optional<FamilyRecord> lookup(const std::vector<FamilyRecord>& catalog, std::string_view id);

enum class ExportFormat { Json, Csv };
std::string export_catalog(const std::vector<FamilyRecord>& catalog, ExportFormat format);
std::vector<FamilyRecord> parse_catalog_json(std::string_view text);

nlohmann::ordered_json to_json(const FamilyRecord& r);
FamilyRecord record_from_json(const nlohmann::ordered_json& j);
void write_record_text(std::ostream& os, const FamilyRecord& r);

// --- construction models --------------------------------------------------

// z * zeta + base[0] * g0 + base[1] * g1, with g0, g1 the base generators in
// BaseRing order.
struct ClassSpec {
  std::int64_t z = 0;
  std::array<std::int64_t, 2> base{0, 0};
};

// P(V) over a supported base, optionally cut by hypersurfaces. V is either
// split (twists) or given by Chern data (rank, c1, c2 as a multiple of the
// point class; c2 is ignored on a curve base).
struct TowerModel {
  BaseKind base = BaseKind::P2;
  int e = 0;
  std::vector<std::array<std::int64_t, 2>> twists;
  int rank = 0;
  std::array<std::int64_t, 2> c1{0, 0};
  std::int64_t c2 = 0;
  std::vector<ClassSpec> cuts;
  ClassSpec polarization;
  // False when the model is only birational to the family (the degree
  // survives, the canonical class does not).
  bool index_check = true;
  // phi_*(H) on P1 for quadric fibrations.
  std::optional<std::vector<int>> pushforward;
  std::string note;
};

struct BlowupModel {
  std::string base_id;
};

// Complete intersection of the given degrees in a weighted projective space.
struct WeightedModel {
  std::vector<int> degrees;
  std::vector<int> weights;
};

// Linear section of Gr(k, n) in its Pluecker embedding.
struct GrassmannianModel {
  int k = 2;
  int n = 5;
};

struct NoModel {
  std::string reason;
};

using FamilyModel = std::variant<TowerModel, BlowupModel, WeightedModel, GrassmannianModel, NoModel>;

// Model for a builtin id; NoModel for unknown ids.
const FamilyModel& model_for(std::string_view id);

BaseRing base_ring(const TowerModel& m);
AmbientPtr realize(const TowerModel& m);
ChowElement realize(const AmbientPtr& a, const ClassSpec& c);

// Product of the cuts (the unit class when there are none).
ChowElement cut_class(const AmbientPtr& a, const TowerModel& m);
// Dimension of the cut-out variety.
int model_dim(const TowerModel& m);
// Integral of H^k times the cuts, k = model_dim.
std::int64_t model_degree(const TowerModel& m);
// K of the ambient plus the sum of the cuts.
ChowElement model_adjunction(const AmbientPtr& a, const TowerModel& m);

// Tower computations replayed by the verifier, with their cited outcomes.
struct TowerConstruction {
  std::string name;
  std::string citation;
  TowerModel tower;  // exactly one cut
  ClassSpec expected_adjunction;
  std::int64_t expected_degree = 0;
  std::string note;
};

const std::vector<TowerConstruction>& tower_constructions();

}  // namespace adp
