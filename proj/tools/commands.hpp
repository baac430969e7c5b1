#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hgm/report.hpp"

namespace hgm::cli {

enum class Format { Json, Markdown };

struct RunConfig {
  double tolerance = 1e-9;
  std::int64_t max_denominator = 360;
  int max_braid = 24;
  Format format = Format::Json;

  // Throws InvalidArgument outside tolerance in (0, 1e-3), max_denominator >= 90.
  CheckConfig check() const;
};

// Each command writes its report to `out` and returns the exit code (0 iff pass).
int cmd_census(const RunConfig& cfg, std::ostream& out);
int cmd_build(const std::string& family, const std::vector<int>& indices, int p, const RunConfig& cfg,
              std::ostream& out);
int cmd_signature(const std::vector<std::string>& alpha, const std::vector<std::string>& beta, const RunConfig& cfg,
                  std::ostream& out);
int cmd_braid(int p, const std::string& rho, const std::string& sigma, const std::string& tau, const RunConfig& cfg,
              std::ostream& out);
int cmd_bh(int id, const RunConfig& cfg, std::ostream& out);
int cmd_abelianize(int p, const RunConfig& cfg, std::ostream& out);

FamilyId parse_family(const std::string& name, const std::vector<int>& indices);
Complex parse_complex(const std::string& text);

}  // namespace hgm::cli
