#include "hgm/report.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

namespace hgm {

Json to_json(const RationalAngle& x) { return x.str(); }

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const HgParameters& params) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : params.alpha) a.push_back(x.str());
  for (const auto& x : params.beta) b.push_back(x.str());
  return Json{{"alpha", a}, {"beta", b}};
}

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

Json to_json(const BraidSignature& b) { return b.str(); }

Json to_json(const GeometryReport& g) {
  return Json{{"signature", to_json(g.signature)},
              {"classification", g.classification ? Json(to_string(*g.classification)) : Json(nullptr)},
              {"classification_match", g.classification_match},
              {"braiding_header", to_json(g.header)},
              {"braiding_criterion", to_json(g.criterion)},
              {"braid_orders", to_json(g.orders)},
              {"braid_match", g.braid_match},
              {"trace_residual", g.trace_residual},
              {"form_residual", g.form_residual}};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["family"] = r.entry.family.str();
  j["p"] = r.entry.p;
  j["classification_expected"] = to_string(r.entry.classification);
  j["classification_computed"] =
      r.geometry.classification ? Json(to_string(*r.geometry.classification)) : Json(r.geometry.signature.str());
  j["nonarithmetic"] = r.entry.nonarithmetic;
  j["excluded"] = r.entry.excluded;
  j["notes"] = r.entry.notes;
  j["params_expected"] = to_json(r.params_expected);
  j["params_computed"] = r.params_computed ? to_json(*r.params_computed) : Json(nullptr);
  j["shift_used"] = r.shift_used ? to_json(*r.shift_used) : Json(nullptr);
  j["distinct_ab"] = r.distinct_ab;
  j["hypergeom_signature"] = r.hypergeom_signature ? to_json(*r.hypergeom_signature) : Json(nullptr);
  j["geometry"] = to_json(r.geometry);
  j["residuals"] = Json{{"closed_form", r.closed_form_residual},
                        {"reflection", r.reflection_residual},
                        {"form", r.geometry.form_residual},
                        {"trace", r.geometry.trace_residual}};
  j["companion_shape"] = r.companion_shape;
  j["reflection_defect"] = r.reflection_defect;
  j["failures"] = r.failures;
  j["pass"] = r.pass;
  return j;
}

namespace {

Json to_json(const IdentityCheck& c) {
  Json j{{"lhs", c.lhs}, {"rhs", c.rhs}, {"relation", to_string(c.relation)}, {"residual", c.residual}};
  if (c.relation == Relation::Projective) j["scalar"] = hgm::to_json(c.scalar);
  return j;
}

}  // namespace

Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"family", r.family.str()}, {"p", r.p}, {"checks", checks}, {"pass", r.pass}};
}

Json to_json(const BhReport& r) {
  Json words = Json::array();
  for (const auto& c : r.consequences) words.push_back(to_json(c));
  return Json{{"id", r.id},
              {"host", r.host.str()},
              {"p", r.p},
              {"A", r.word_A},
              {"B", r.word_B},
              {"params_computed", to_json(r.params_computed)},
              {"params_table", to_json(r.params_table)},
              {"shift_stated", to_json(r.shift_stated)},
              {"shift_found", r.shift_found ? to_json(*r.shift_found) : Json(nullptr)},
              {"params_match", r.params_match},
              {"host_signature", to_json(r.host_signature)},
              {"host_definite", r.host_definite},
              {"reflection_defect", r.reflection_defect},
              {"consequences", words},
              {"pass", r.pass}};
}

Json to_json(const FormReport& r) {
  Json j{{"family", r.family.str()},
         {"p", r.p},
         {"d_form", r.d_form},
         {"d_closed", r.d_closed},
         {"d_hypergeom", r.d_hypergeom},
         {"offdiag_residual", r.offdiag_residual},
         {"closed_residual", r.closed_residual},
         {"hypergeom_imag", r.hypergeom_imag},
         {"factor", r.factor},
         {"factor_residual", r.factor_residual}};
  if (r.unphased_d3_residual) j["unphased_d3_residual"] = *r.unphased_d3_residual;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json factors = Json::array();
  for (const BigInt& f : r.invariant_factors) factors.push_back(f.convert_to<long long>());
  return Json{{"p", r.p},
              {"invariant_factors", factors},
              {"free_rank", r.free_rank},
              {"min_generators", r.min_generators},
              {"obstructed", r.obstructed},
              {"group", r.group}};
}

Json to_json(const Bh12Decomposition& d) {
  return Json{{"permutation", d.permutation}, {"permutes", d.permutes}, {"pass", d.pass}};
}

Json to_json(const HermitianData& h) {
  Json c = Json::array();
  for (Complex z : h.c) c.push_back(to_json(z));
  return Json{{"c", c}, {"psi", h.psi}, {"d", h.d}, {"max_imag", h.max_imag}};
}

namespace {

CensusEntry census_entry(const CatalogEntry& e, const CheckConfig& cfg) {
  CensusEntry out;
  out.verification = verify_entry(e, cfg);
  out.failures = out.verification.failures;
  if (!e.excluded) {
    out.identities = verify_word_identities(e.family, e.p, cfg.tol);
    for (const auto& c : out.identities->checks)
      if (c.relation == Relation::Unequal) out.failures.push_back("identity " + c.lhs + " = " + c.rhs + " fails");
    if (e.family.kind == FamilyKind::ThreeFold || e.family.kind == FamilyKind::TwoFold) {
      out.form = compare_forms(e.family, e.p, cfg.tol);
      if (!out.form->pass) out.failures.push_back("form comparison fails");
    }
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace

Census run_census(const CheckConfig& cfg, bool concurrent) {
  Census c;
  const auto& entries = catalog();
  if (concurrent) {
    std::vector<std::future<CensusEntry>> jobs;
    for (const CatalogEntry& e : entries)
      jobs.push_back(std::async(std::launch::async, [&e, &cfg] { return census_entry(e, cfg); }));
    for (auto& j : jobs) c.entries.push_back(j.get());
  } else {
    for (const CatalogEntry& e : entries) c.entries.push_back(census_entry(e, cfg));
  }
  c.pass = std::all_of(c.entries.begin(), c.entries.end(),
                       [](const CensusEntry& e) { return e.verification.entry.excluded || e.pass; });
  return c;
}

Json to_json(const CensusEntry& e) {
  Json j = to_json(e.verification);
  if (e.identities) j["identities"] = to_json(*e.identities);
  if (e.form) j["form_comparison"] = to_json(*e.form);
  j["failures"] = e.failures;
  j["pass"] = e.pass;
  return j;
}

Json to_json(const Census& c) {
  Json covered = Json::array(), excluded = Json::array();
  int failed = 0;
  for (const CensusEntry& e : c.entries) {
    if (e.verification.entry.excluded) {
      excluded.push_back(to_json(e));
    } else {
      covered.push_back(to_json(e));
      if (!e.pass) ++failed;
    }
  }
  return Json{{"covered", covered},
              {"excluded", excluded},
              {"summary", Json{{"covered", covered.size()}, {"excluded", excluded.size()}, {"failed", failed}}},
              {"pass", c.pass}};
}

std::string census_markdown(const Census& c) {
  std::ostringstream out;
  const char* titles[] = {"(n,n,n;m)", "(n,n,m;m)", "(3,3,4;n)", "(2,3,n;n)", "(3,4,4;4)"};
  const FamilyKind kinds[] = {FamilyKind::ThreeFold, FamilyKind::TwoFold, FamilyKind::F334, FamilyKind::F23n,
                              FamilyKind::F344};
  for (int t = 0; t < 5; ++t) {
    const FamilyKind kind = kinds[t];
    const bool two_index = kind == FamilyKind::ThreeFold || kind == FamilyKind::TwoFold;
    out << "### " << titles[t] << "\n\n";
    if (two_index) out << "| n | m | P2 | E2 | H2 | Notes |\n|---|---|---|---|---|---|\n";
    else if (kind == FamilyKind::F344) out << "| P2 | E2 | H2 | Notes |\n|---|---|---|---|\n";
    else out << "| n | P2 | E2 | H2 | Notes |\n|---|---|---|---|---|\n";

    // Rows in catalog order, keyed by family.
    std::vector<FamilyId> order;
    std::map<std::string, std::array<std::vector<std::string>, 3>> cells;
    std::map<std::string, std::string> notes;
    for (const CensusEntry& e : c.entries) {
      const CatalogEntry& ce = e.verification.entry;
      if (ce.family.kind != kind) continue;
      const std::string key = ce.family.str();
      if (!cells.count(key)) order.push_back(ce.family);
      std::string cell = std::to_string(ce.p);
      if (ce.nonarithmetic) cell = "**" + cell + "**";
      if (ce.excluded) cell = "(" + cell + ")";
      if (!e.pass) cell += " ✗";
      cells[key][static_cast<int>(ce.classification)].push_back(cell);
      notes[key] = ce.notes;
    }
    for (const FamilyId& f : order) {
      const auto& row = cells[f.str()];
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
      };
      out << "|";
      if (two_index) out << " " << f.n << " | " << f.m << " |";
      else if (kind != FamilyKind::F344) out << " " << f.n << " |";
      out << " " << join(row[0]) << " | " << join(row[1]) << " | " << join(row[2]) << " | " << notes[f.str()]
          << " |\n";
    }
    out << "\n";
  }

  std::vector<const CensusEntry*> failed;
  for (const CensusEntry& e : c.entries)
    if (!e.pass) failed.push_back(&e);
  out << "Bold: non-arithmetic. Parenthesized: excluded (geometry checks only). ✗: a check failed.\n\n";
  if (failed.empty()) {
    out << "All entries pass.\n";
  } else {
    out << "Failures:\n\n";
    for (const CensusEntry* e : failed) {
      out << "- " << e->verification.entry.family.str() << " p=" << e->verification.entry.p << ":";
      for (const auto& f : e->failures) out << " " << f << ";";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hgm
