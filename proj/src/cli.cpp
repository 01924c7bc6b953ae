#include "adp/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "adp/catalog.hpp"
#include "adp/enumerate.hpp"
#include "adp/verify.hpp"

namespace adp {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string partner_of(const std::string& id) {
  const auto r = lookup(id);
  return r && r->flop_partner ? *r->flop_partner : "-";
}

void quadric_table(std::ostream& os, const std::vector<TupleVerdict>& vs) {
  os << std::left << std::setw(4) << "a1" << std::setw(4) << "a2" << std::setw(4) << "a3" << std::setw(4) << "a4"
     << std::setw(7) << "alpha" << std::setw(4) << "d" << std::setw(20) << "verdict" << std::setw(10) << "family"
     << std::setw(10) << "partner"
     << "reason\n";
  for (const auto& v : vs) {
    for (int a : v.tuple.entries()) os << std::setw(4) << a;
    os << std::setw(7) << v.alpha << std::setw(4) << v.degree << std::setw(20) << to_string(v.kind)
       << std::setw(10) << (v.family_id.empty() ? "-" : v.family_id) << std::setw(10)
       << (v.family_id.empty() ? "-" : partner_of(v.family_id)) << (v.reason.empty() ? "-" : v.reason)
       << (v.inferred ? " [inferred]" : "")
       << '\n';
  }
}

ordered_json quadric_json(const std::vector<TupleVerdict>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) {
    ordered_json j;
    j["tuple"] = v.tuple.entries();
    j["alpha"] = v.alpha;
    j["degree"] = v.degree;
    j["verdict"] = to_string(v.kind);
    if (!v.family_id.empty()) {
      j["family"] = v.family_id;
      j["partner"] = partner_of(v.family_id);
    }
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["inferred"] = v.inferred;
    arr.push_back(j);
  }
  return arr;
}

void candidate_table(std::ostream& os, const std::vector<FamilyCandidate>& cs) {
  os << std::left << std::setw(56) << "construction" << std::setw(5) << "dim" << std::setw(4) << "d" << std::setw(5)
     << "rho" << std::setw(20) << "family" << std::setw(10) << "partner"
     << "status\n";
  for (const auto& c : cs) {
    os << std::setw(56) << describe(c.construction) << std::setw(5) << c.dim << std::setw(4) << c.degree
       << std::setw(5) << c.picard << std::setw(20) << c.family_id.value_or("-") << std::setw(10)
       << c.flop_partner.value_or("-") << (c.excluded ? "excluded: " + c.reason : std::string("ok"));
    if (!c.spanned) os << " [base point]";
    os << '\n';
  }
}

ordered_json candidate_json(const std::vector<FamilyCandidate>& cs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cs) {
    ordered_json j;
    j["construction"] = describe(c.construction);
    j["dim"] = c.dim;
    j["degree"] = c.degree;
    j["picard"] = c.picard;
    if (c.family_id) j["family"] = *c.family_id;
    if (c.flop_partner) j["partner"] = *c.flop_partner;
    j["excluded"] = c.excluded;
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["spanned"] = c.spanned;
    if (c.source_omitted) j["source_omitted"] = true;
    j["citation"] = c.citation;
    if (!c.notes.empty()) j["notes"] = c.notes;
    ordered_json computed = ordered_json::object();
    for (const auto& [k, v] : c.computed) computed[k] = v;
    j["computed"] = computed;
    arr.push_back(j);
  }
  return arr;
}

std::string model_text(const std::string& id) {
  const FamilyModel& m = model_for(id);
  if (const auto* t = std::get_if<TowerModel>(&m)) {
    const AmbientPtr a = realize(*t);
    std::string s = a->describe() + "; H = " + realize(a, t->polarization).to_string();
    for (const auto& c : t->cuts) s += "; cut by |" + realize(a, c).to_string() + "|";
    if (!t->note.empty()) s += "; " + t->note;
    return s;
  }
  if (const auto* w = std::get_if<WeightedModel>(&m)) {
    std::ostringstream os;
    os << "complete intersection of degrees (";
    for (std::size_t i = 0; i < w->degrees.size(); ++i) os << (i ? "," : "") << w->degrees[i];
    os << ") in P(";
    for (std::size_t i = 0; i < w->weights.size(); ++i) os << (i ? "," : "") << w->weights[i];
    os << ")";
    return os.str();
  }
  if (const auto* g = std::get_if<GrassmannianModel>(&m)) {
    return "linear section of Gr(" + std::to_string(g->k) + "," + std::to_string(g->n) + ")";
  }
  if (const auto* b = std::get_if<BlowupModel>(&m)) return "blow-up of a general point of " + b->base_id;
  return "none (" + std::get<NoModel>(m).reason + ")";
}

void emit(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost del Pezzo classification engine", "adp"};
  app.require_subcommand(1, 1);

  std::string enum_case, enum_format = "table", surface = "p1xp1";
  int dim = 4;
  auto* en = app.add_subcommand("enumerate", "Run a classification search");
  en->add_option("--case", enum_case, "quadric | p2bundle | blowup | rho3 | highdim")
      ->required()
      ->check(CLI::IsMember({"quadric", "p2bundle", "blowup", "rho3", "highdim"}));
  auto* dim_opt = en->add_option("--dim", dim, "dimension for --case highdim (>= 4)");
  auto* surface_opt =
      en->add_option("--surface", surface, "p1xp1 | f2 for --case rho3")->check(CLI::IsMember({"p1xp1", "f2"}));
  en->add_option("--format", enum_format, "table | json")->check(CLI::IsMember({"table", "json"}));

  std::string only, verify_format = "text";
  auto* ve = app.add_subcommand("verify", "Run the verification suite");
  ve->add_option("--only", only, "families | flops | smoothings | constructions | enumeration")
      ->check(CLI::IsMember(report_names()));
  ve->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string show_id, show_format = "text";
  auto* sh = app.add_subcommand("show", "Print one catalog record");
  sh->add_option("id", show_id, "family id or alias such as V_{2,4}")->required();
  sh->add_option("--format", show_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string export_format, export_out;
  auto* ex = app.add_subcommand("export", "Write the catalog");
  ex->add_option("--format", export_format, "json | csv")->required()->check(CLI::IsMember({"json", "csv"}));
  ex->add_option("--out", export_out, "output path (default: standard output)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*en) {
      if (dim_opt->count() && enum_case != "highdim") throw UsageError("--dim applies only to --case highdim");
      if (surface_opt->count() && enum_case != "rho3") throw UsageError("--surface applies only to --case rho3");
      const bool json = enum_format == "json";
      if (enum_case == "quadric") {
        const auto vs = enumerate_quadric_fibrations();
        json ? emit(out, quadric_json(vs)) : quadric_table(out, vs);
        return kExitOk;
      }
      std::vector<FamilyCandidate> cs;
      if (enum_case == "p2bundle") cs = enumerate_p2_bundles();
      if (enum_case == "blowup") cs = enumerate_point_blowups();
      if (enum_case == "rho3") cs = enumerate_rho3(surface == "f2" ? BaseRing::hirzebruch(2) : BaseRing::p1xp1());
      if (enum_case == "highdim") {
        if (dim < 4) throw UsageError("--dim must be at least 4");
        cs = enumerate_highdim(dim);
      }
      json ? emit(out, candidate_json(cs)) : candidate_table(out, cs);
      return kExitOk;
    }
    if (*ve) {
      const Report rep = only.empty() ? verify_all(builtin_catalog()) : verify_named(only, builtin_catalog());
      if (verify_format == "json") {
        emit(out, to_json(rep));
      } else {
        write_report_text(out, rep);
      }
      return rep.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (*sh) {
      const auto r = lookup(show_id);
      if (!r) throw UsageError("unknown family id '" + show_id + "'");
      if (show_format == "json") {
        ordered_json j = to_json(*r);
        j["model"] = model_text(r->id);
        emit(out, j);
      } else {
        write_record_text(out, *r);
        out << "model: " << model_text(r->id) << '\n';
      }
      return kExitOk;
    }
    if (*ex) {
      const std::string text =
          export_catalog(builtin_catalog(), export_format == "json" ? ExportFormat::Json : ExportFormat::Csv);
      if (export_out.empty()) {
        out << text;
      } else {
        std::ofstream f(export_out, std::ios::binary);
        if (!f) throw UsageError("cannot open '" + export_out + "' for writing");
        f << text;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace adp
