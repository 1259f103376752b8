#pragma once

#include <string>
#include <vector>

#include "rcc/catalog.hpp"
#include "rcc/classifier.hpp"

namespace rcc {

enum class Format { table, json, csv };

Format parse_format(const std::string& s);  // "table" | "json" | "csv"

// Catalog rows: one record per cusp type, rationals as "p/q".
std::string render_catalog(const std::vector<CuspType>& types, Format f);
std::string render_invariants(const CuspType& t, Format f);
std::string render_survey(const std::vector<SurveyRow>& rows, Format f);
std::string render_classification(const ClassificationResult& res, int cusps, Format f);
std::string render_audit(const AuditReport& rep, Format f);

// Reproduction manifest: version, argv, digests of consumed/produced bytes,
// wall time. One JSON object per run.
struct RunManifest {
  std::string version;
  std::string command_line;
  std::vector<std::pair<std::string, std::string>> input_digests;
  std::string output_digest;
  long long wall_ms = 0;
};

std::string fnv1a64_hex(const std::string& bytes);
std::string manifest_json(const RunManifest& m);

} // namespace rcc
