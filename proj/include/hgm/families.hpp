#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgm/hypergeom.hpp"
#include "hgm/reflection.hpp"

namespace hgm {

enum class FamilyKind { ThreeFold, TwoFold, F334, F23n, F344 };

struct FamilyId {
  FamilyKind kind = FamilyKind::ThreeFold;
  int n = 0;  // unused for F344
  int m = 0;  // used by ThreeFold and TwoFold only

  static FamilyId three_fold(int n, int m) { return {FamilyKind::ThreeFold, n, m}; }
  static FamilyId two_fold(int n, int m) { return {FamilyKind::TwoFold, n, m}; }
  static FamilyId f334(int n) { return {FamilyKind::F334, n, 0}; }
  static FamilyId f23n(int n) { return {FamilyKind::F23n, n, 0}; }
  static FamilyId f344() { return {FamilyKind::F344, 0, 0}; }

  // "threefold(3,2)", "f334(5)", "f344".
  std::string str() const;
  // Braiding parameters (a,b,c;d) shared by the family.
  BraidSignature header() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

const char* kind_name(FamilyKind kind);

enum class Geometry { P2, E2, H2 };

const char* to_string(Geometry g);
Signature signature_of(Geometry g);
std::optional<Geometry> geometry_of(const Signature& normalized);

struct CatalogEntry {
  FamilyId family;
  int p = 0;
  Geometry classification = Geometry::H2;
  bool nonarithmetic = false;
  bool excluded = false;
  std::string notes;
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_entry(const FamilyId& family, int p);

ReflectionParams family_parameters(const FamilyId& family, int p);

// Expected parameter rows of the per-family value tables.
HgParameters expected_parameters(const FamilyId& family, int p);

struct FamilyBuild {
  FamilyId family;
  int p = 0;
  ReflectionTriple triple;
  std::optional<CMat3> symmetry;  // J, Q or S
  CMat3 conjugator;               // identity or C
  CMat3 A, B;                     // conjugated generators
  CMat3 A_closed, B_closed;       // closed forms
  CMat3 reflection;               // C^{-1} R_j C expected to equal B A^{-1}
  std::string reflection_name;    // "R1", "R2" or "R3"
  HgParameters expected_params;

  // R1 R2 R3 A B C plus J, Q or S.
  Assignment letters() const;
};

// Builds without consulting the catalog.
FamilyBuild construct(const FamilyId& family, int p, const Tolerance& tol = {});
// Requires a catalog entry; F344 with 3 | p is ExcludedFamily.
FamilyBuild build(const FamilyId& family, int p, const Tolerance& tol = {});

struct CheckConfig {
  Tolerance tol;
  std::int64_t max_den = 360;
  int max_braid = 24;
};

struct GeometryReport {
  Signature signature;  // normalized signature of H
  std::optional<Geometry> classification;
  bool classification_match = false;
  BraidSignature header;
  BraidSignature criterion;  // from |sigma|, |tau|, |rho|, |sigma tau - conj rho|
  BraidSignature orders;     // from braid_order on the four pairs
  bool braid_match = false;
  double trace_residual = 0.0;
  double form_residual = 0.0;
};

GeometryReport verify_geometry(const CatalogEntry& entry, const CheckConfig& cfg = {});

struct VerificationReport {
  CatalogEntry entry;
  GeometryReport geometry;
  bool companion_shape = false;
  double closed_form_residual = 0.0;
  bool reflection_defect = false;
  double reflection_residual = 0.0;
  HgParameters params_expected;
  std::optional<HgParameters> params_computed;
  std::string recovery_error;
  std::optional<RationalAngle> shift_used;
  bool params_match = false;
  bool distinct_ab = false;  // a_j != b_k for the recovered parameters
  std::optional<Signature> hypergeom_signature;
  std::vector<std::string> failures;
  bool pass = false;
};

VerificationReport verify_entry(const CatalogEntry& entry, const CheckConfig& cfg = {});

struct IdentityCheck {
  std::string lhs;
  std::string rhs;
  Relation relation = Relation::Unequal;
  Complex scalar{1.0, 0.0};
  double residual = 0.0;
};

struct IdentityReport {
  FamilyId family;
  int p = 0;
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

IdentityCheck check_identity(const std::string& lhs, const std::string& rhs, const Assignment& letters,
                             const Tolerance& tol = {});

IdentityReport verify_word_identities(const FamilyId& family, int p, const Tolerance& tol = {});

struct BhReport {
  int id = 0;
  FamilyId host;
  int p = 0;
  std::string word_A;
  std::string word_B;
  HgParameters params_computed;
  HgParameters params_table;
  RationalAngle shift_stated;
  std::optional<RationalAngle> shift_found;
  bool params_match = false;
  Signature host_signature;
  bool host_definite = false;
  bool reflection_defect = false;
  std::vector<IdentityCheck> consequences;
  bool pass = false;
};

BhReport bh_identify(int id, const CheckConfig& cfg = {});

struct Bh12Decomposition {
  std::array<std::array<int, 3>, 3> permutation{};  // permutation[k][i] = image line of V_{i+1} under A^k (B A^-1) A^-k
  std::array<bool, 3> permutes{};
  bool pass = false;
};

Bh12Decomposition bh12_decomposition(const Tolerance& tol = {});

struct FormReport {
  FamilyId family;
  int p = 0;
  CMat3 V;
  CMat3 VHV;
  double offdiag_residual = 0.0;
  std::array<double, 3> d_form{};       // diagonal of V* H V
  std::array<double, 3> d_closed{};     // closed forms
  double closed_residual = 0.0;
  std::array<double, 3> d_hypergeom{};  // -i e^{-i pi/p} c_j
  double hypergeom_imag = 0.0;
  double factor = 0.0;  // best fit d_form = factor * d_hypergeom
  double factor_residual = 0.0;
  std::optional<double> unphased_d3_residual;  // three-fold only; see README
  bool pass = false;
};

FormReport compare_forms(const FamilyId& family, int p, const Tolerance& tol = {});

}  // namespace hgm
