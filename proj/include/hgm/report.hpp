#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hgm/abelian.hpp"
#include "hgm/families.hpp"

namespace hgm {

using Json = nlohmann::ordered_json;

Json to_json(const RationalAngle& x);
Json to_json(Complex z);
Json to_json(const CMat3& m);
Json to_json(const HgParameters& params);
Json to_json(const Signature& s);
Json to_json(const BraidSignature& b);
Json to_json(const GeometryReport& g);
Json to_json(const VerificationReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const BhReport& r);
Json to_json(const FormReport& r);
Json to_json(const ObstructionReport& r);
Json to_json(const Bh12Decomposition& d);
Json to_json(const HermitianData& h);

struct CensusEntry {
  VerificationReport verification;
  std::optional<IdentityReport> identities;
  std::optional<FormReport> form;
  std::vector<std::string> failures;  // verification failures plus identity and form failures
  bool pass = false;
};

struct Census {
  std::vector<CensusEntry> entries;  // catalog order
  bool pass = false;                 // every covered entry passes
};

// Verifies every catalog entry; entries are independent and may run concurrently.
Census run_census(const CheckConfig& cfg = {}, bool concurrent = true);

Json to_json(const CensusEntry& e);
Json to_json(const Census& c);

// Markdown tables in the catalog's P2 / E2 / H2 layout.
std::string census_markdown(const Census& c);

}  // namespace hgm
