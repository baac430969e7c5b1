#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace hgm::cli {

CheckConfig RunConfig::check() const {
  if (max_denominator < 90) throw Error(ErrorCode::InvalidArgument, "--max-denominator must be at least 90");
  if (max_braid < 2) throw Error(ErrorCode::InvalidArgument, "--max-braid must be at least 2");
  CheckConfig c;
  c.tol = Tolerance(tolerance);
  c.max_den = max_denominator;
  c.max_braid = max_braid;
  return c;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Nested objects become indented bullet lists; arrays of scalars stay inline.
void render_markdown(const Json& j, std::ostream& out, int depth) {
  const std::string indent(2 * depth, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : std::string();
    const bool nested = v.is_object() || (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) {
                                            return x.is_object();
                                          }));
    out << indent << "- ";
    if (!key.empty()) out << "**" << key << "**" << (nested ? "" : ": ");
    if (nested) {
      out << "\n";
      render_markdown(v, out, depth + 1);
    } else {
      out << scalar_text(v) << "\n";
    }
  }
}

int emit(const Json& report, bool pass, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Json) {
    out << report.dump(2) << "\n";
  } else {
    render_markdown(report, out, 0);
  }
  return pass ? 0 : 1;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

FamilyId parse_family(const std::string& name, const std::vector<int>& indices) {
  const std::string n = lower(name);
  auto need = [&](std::size_t k) {
    if (indices.size() != k)
      throw Error(ErrorCode::InvalidArgument, name + " takes " + std::to_string(k) + " index argument(s)");
  };
  if (n == "threefold") return need(2), FamilyId::three_fold(indices[0], indices[1]);
  if (n == "twofold") return need(2), FamilyId::two_fold(indices[0], indices[1]);
  if (n == "f334") return need(1), FamilyId::f334(indices[0]);
  if (n == "f23n") return need(1), FamilyId::f23n(indices[0]);
  if (n == "f344") return need(0), FamilyId::f344();
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "' (threefold, twofold, f334, f23n, f344)");
}

Complex parse_complex(const std::string& text) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size())
      throw Error(ErrorCode::ParseError, "expected 're,im' or 're', got '" + text + "'");
    return v;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  const Census census = run_census(cfg.check());
  if (cfg.format == Format::Markdown) {
    out << census_markdown(census);
    return census.pass ? 0 : 1;
  }
  return emit(to_json(census), census.pass, cfg, out);
}

int cmd_build(const std::string& family, const std::vector<int>& indices, int p, const RunConfig& cfg,
              std::ostream& out) {
  const CheckConfig check = cfg.check();
  const FamilyId id = parse_family(family, indices);
  const FamilyBuild b = build(id, p, check.tol);
  const CatalogEntry entry = *find_entry(id, p);

  const VerificationReport v = verify_entry(entry, check);
  const IdentityReport ids = verify_word_identities(id, p, check.tol);
  Json j = to_json(v);
  j["matrices"] = Json{{"R1", to_json(b.triple.R1)},
                       {"R2", to_json(b.triple.R2)},
                       {"R3", to_json(b.triple.R3)},
                       {"H", to_json(b.triple.H)},
                       {"A", to_json(b.A)},
                       {"B", to_json(b.B)}};
  j["identities"] = to_json(ids);
  bool pass = v.pass && ids.pass;
  if (id.kind == FamilyKind::ThreeFold || id.kind == FamilyKind::TwoFold) {
    const FormReport f = compare_forms(id, p, check.tol);
    j["form_comparison"] = to_json(f);
    pass = pass && f.pass;
  }
  j["pass"] = pass;
  return emit(j, pass, cfg, out);
}

int cmd_signature(const std::vector<std::string>& alpha, const std::vector<std::string>& beta, const RunConfig& cfg,
                  std::ostream& out) {
  const CheckConfig check = cfg.check();
  if (alpha.size() != 3 || beta.size() != 3)
    throw Error(ErrorCode::InvalidArgument, "--alpha and --beta each take three rationals");
  Angles a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = RationalAngle::parse(alpha[i]);
    b[i] = RationalAngle::parse(beta[i]);
  }
  const HgParameters params = HgParameters::make(a, b);
  if (!params.alpha_distinct()) throw Error(ErrorCode::RepeatedEigenvalue, "alpha entries must be distinct mod 1");
  if (params.shares_eigenvalue())
    throw Error(ErrorCode::SharedEigenvalue, "some alpha_j equals some beta_k mod 1");
  const HermitianData h = hermitian_form(params, check.tol);
  const Signature s = classify(params, check.tol);
  const std::optional<Geometry> g = geometry_of(s);

  Json j;
  j["params"] = to_json(params);
  j["psi"] = h.psi;
  j["d"] = h.d;
  j["signature"] = to_json(s);
  j["definite"] = s == signature_of(Geometry::P2);
  j["classification"] = g ? Json(to_string(*g)) : Json(nullptr);
  j["sine_product_d"] = sine_product_d(params);
  j["sine_product_sign"] = sine_product_sign(params);
  if (auto m = bh_lookup(params)) {
    j["bh"] = Json{{"id", m->id}, {"shift", to_json(m->shift)}};
  } else {
    j["bh"] = nullptr;
  }
  return emit(j, true, cfg, out);
}

int cmd_braid(int p, const std::string& rho, const std::string& sigma, const std::string& tau, const RunConfig& cfg,
              std::ostream& out) {
  const CheckConfig check = cfg.check();
  const ReflectionParams params{p, parse_complex(rho), parse_complex(sigma), parse_complex(tau)};
  const ReflectionTriple t = mostow_generators(params, check.tol);
  const BraidSignature criterion = braiding_parameters(params, check.max_braid, check.tol);
  const BraidSignature orders = braid_orders(t, check.max_braid, check.tol);
  const double trace = trace_formula_residual(t, check.tol);
  const double form = form_residual(t);
  const Signature s = hermitian_signature(t.H, check.tol, kDegenerateBand).normalized();
  const std::optional<Geometry> g = geometry_of(s);

  Json j;
  j["p"] = p;
  j["rho"] = to_json(params.rho);
  j["sigma"] = to_json(params.sigma);
  j["tau"] = to_json(params.tau);
  j["braiding_parameters"] = to_json(criterion);
  j["braid_orders"] = to_json(orders);
  j["braid_match"] = criterion == orders;
  j["trace_residual"] = trace;
  j["form_residual"] = form;
  j["signature"] = to_json(s);
  j["classification"] = g ? Json(to_string(*g)) : Json(nullptr);
  const bool pass = criterion == orders && trace <= 1e-10 && form <= check.tol.eps;
  j["pass"] = pass;
  return emit(j, pass, cfg, out);
}

int cmd_bh(int id, const RunConfig& cfg, std::ostream& out) {
  const CheckConfig check = cfg.check();
  const BhReport r = bh_identify(id, check);
  Json j = to_json(r);
  bool pass = r.pass;
  if (id == 12) {
    const Bh12Decomposition d = bh12_decomposition(check.tol);
    j["decomposition"] = to_json(d);
    pass = pass && d.pass;
    j["pass"] = pass;
  }
  return emit(j, pass, cfg, out);
}

int cmd_abelianize(int p, const RunConfig& cfg, std::ostream& out) {
  cfg.check();
  const ObstructionReport r = (p == 3 || p == 6) ? verify_nongeneration(p) : abelianization(p);
  Json j = to_json(r);
  // p = 4 is report-only.
  const bool pass = p == 4 || r.obstructed;
  j["pass"] = pass;
  return emit(j, pass, cfg, out);
}

}  // namespace hgm::cli
