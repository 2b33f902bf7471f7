#include "spincover/report.hpp"

#include <json.hpp>
#include <sstream>

namespace spincover {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json abelian_json(const AbelianGroup& g) {
  ordered_json j;
  j["factors"] = g.factors;
  j["free_rank"] = g.free_rank;
  j["display"] = g.to_string();
  return j;
}

ordered_json fact_json(const Fact& f) {
  ordered_json j;
  j["claim"] = f.claim;
  j["provenance"] = provenance_name(f.provenance);
  if (!f.detail.empty()) j["detail"] = f.detail;
  return j;
}

ordered_json generator_json(const GeneratorDescription& g) {
  ordered_json j;
  j["kind"] = generator_kind_name(g.kind);
  if (g.a) j["a"] = g.a;
  j["order"] = g.order;  // 0 = infinite
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

ordered_json certificate_json(const VanishingCertificate& c) {
  ordered_json j;
  j["family"] = family_name(c.family);
  j["n"] = c.n;
  j["p"] = c.p;
  j["class"] = c.mu.to_string();
  ordered_json verdicts = ordered_json::array();
  for (const auto& [label, v] : c.verdicts) {
    ordered_json e;
    e["label"] = label.to_string();
    e["verdict"] = v == Verdict::Zero ? "zero" : "nonzero-known";
    verdicts.push_back(e);
  }
  j["verdicts"] = verdicts;
  switch (c.conclusion) {
    case ScreenConclusion::AllFaithfulVanish:
      j["conclusion"] = "all-faithful-vanish";
      break;
    case ScreenConclusion::ValueInSqrtDZ:
      j["conclusion"] = "value-in-sqrt-d-Z";
      j["d"] = c.sqrt_d;
      break;
    case ScreenConclusion::Inconclusive:
      j["conclusion"] = "inconclusive";
      break;
  }
  j["canonical_witness"] = c.canonical_witness;
  j["verified"] = c.verify();
  return j;
}

ordered_json tgroup_json(const TGroupReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["group"] = spec_name(r.spec);
  j["p"] = r.p;
  ordered_json s;
  s["inflation_iso"] = r.structure.inflation_iso;
  if (r.structure.value) s["value"] = abelian_json(*r.structure.value);
  if (r.structure.paper_stated)
    s["paper_stated"] = abelian_json(*r.structure.paper_stated);
  if (!r.structure.note.empty()) s["note"] = r.structure.note;
  // flat keys kept for the common case, per the report schema
  if (r.structure.value) {
    s["factors"] = r.structure.value->factors;
    s["free_rank"] = r.structure.value->free_rank;
  }
  j["structure"] = s;
  ordered_json gens = ordered_json::array();
  for (const auto& g : r.generators) gens.push_back(generator_json(g));
  j["generators"] = gens;
  ordered_json facts = ordered_json::array();
  for (const auto& f : r.facts) facts.push_back(fact_json(f));
  j["facts"] = facts;
  if (r.e) j["e"] = *r.e;
  if (r.x_n) j["x_n"] = abelian_json(*r.x_n);
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  j["seed"] = r.seed;
  j["budget_closure"] = r.budget_closure;
  return j;
}

ordered_json table_json(const TableReport& t) {
  ordered_json j;
  j["schema"] = 1;
  j["name"] = t.name;
  ordered_json cells = ordered_json::array();
  for (const auto& c : t.cells) {
    ordered_json e;
    e["row"] = c.row;
    e["column"] = c.column;
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    e["provenance"] = provenance_name(c.provenance);
    e["match"] = c.match;
    if (!c.note.empty()) e["note"] = c.note;
    cells.push_back(e);
  }
  j["cells"] = cells;
  j["all_match"] = t.all_match();
  return j;
}

std::string structure_display(const TStructure& s) {
  if (s.value) return s.value->to_string();
  if (s.inflation_iso) return "inflation iso from the quotient";
  return "?";
}

}  // namespace

std::string to_json(const TGroupReport& r, int indent) {
  return tgroup_json(r).dump(indent) + "\n";
}

std::string to_json(const TableReport& t, int indent) {
  return table_json(t).dump(indent) + "\n";
}

std::string to_json(const VanishingCertificate& c, int indent) {
  ordered_json j = certificate_json(c);
  j["schema"] = 1;
  return j.dump(indent) + "\n";
}

bool VerifySummary::ok() const {
  for (const auto& r : relations)
    if (!r.ok()) return false;
  for (const auto& f : fuzz)
    if (!f.ok()) return false;
  return true;
}

std::string to_json(const VerifySummary& v, int indent) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json rel = ordered_json::array();
  for (const auto& r : v.relations) {
    ordered_json e;
    e["n"] = r.n;
    e["alpha"] = r.alpha;
    e["checked"] = r.checked;
    e["failures"] = r.failures;
    rel.push_back(e);
  }
  j["relations"] = rel;
  ordered_json fz = ordered_json::array();
  for (const auto& f : v.fuzz) {
    ordered_json e;
    e["n"] = f.n;
    e["alpha"] = f.alpha;
    e["trials"] = f.trials;
    e["seed"] = f.seed;
    e["failures"] = f.failures;
    fz.push_back(e);
  }
  j["fuzz"] = fz;
  j["ok"] = v.ok();
  return j.dump(indent) + "\n";
}

std::string to_markdown(const TGroupReport& r) {
  std::ostringstream out;
  out << "# T(" << spec_name(r.spec) << "), p = " << r.p << "\n\n";
  out << "structure: " << structure_display(r.structure) << "\n\n";
  if (r.structure.paper_stated)
    out << "stated elsewhere: " << r.structure.paper_stated->to_string()
        << "\n\n";
  if (!r.structure.note.empty()) out << r.structure.note << "\n\n";
  if (!r.generators.empty()) {
    out << "## generators\n\n";
    for (const auto& g : r.generators) {
      out << "- " << generator_kind_name(g.kind);
      if (g.a) out << " (a = " << g.a << ")";
      if (g.order) out << ", order " << g.order;
      if (!g.note.empty()) out << ": " << g.note;
      out << "\n";
    }
    out << "\n";
  }
  if (!r.facts.empty()) {
    out << "## facts\n\n";
    for (const auto& f : r.facts) {
      out << "- [" << provenance_name(f.provenance) << "] " << f.claim;
      if (!f.detail.empty()) out << " (" << f.detail << ")";
      out << "\n";
    }
  }
  return out.str();
}

std::string to_markdown(const TableReport& t) {
  std::ostringstream out;
  out << "# " << t.name << "\n\n";
  out << "| row | column | computed | expected | provenance | match |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& c : t.cells) {
    out << "| " << c.row << " | " << c.column << " | " << c.computed
        << " | " << c.expected << " | " << provenance_name(c.provenance)
        << " | " << (c.match ? "yes" : "NO") << " |\n";
  }
  out << "\n" << (t.all_match() ? "all cells match" : "MISMATCHES PRESENT")
      << "\n";
  return out.str();
}

std::string to_text(const TGroupReport& r) {
  std::ostringstream out;
  out << "T(" << spec_name(r.spec) << "), p=" << r.p << ": "
      << structure_display(r.structure) << "\n";
  return out.str();
}

std::string to_text(const TableReport& t) {
  std::ostringstream out;
  size_t bad = 0;
  for (const auto& c : t.cells)
    if (!c.match) ++bad;
  out << t.name << ": " << t.cells.size() << " cells, " << bad
      << " mismatch(es)\n";
  return out.str();
}

}  // namespace spincover
