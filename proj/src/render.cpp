#include "rcc/render.hpp"

#include <json.hpp>
#include <sstream>

#include "rcc/errors.hpp"

namespace rcc {

using nlohmann::json;

namespace {

json cusp_record(const CuspType& t) {
  json j;
  j["pairs"] = t.pairs_text();
  j["lambda"] = t.lambda;
  j["ind"] = rat_str(t.ind);
  j["M"] = t.M.str();
  j["I"] = t.I.str();
  j["r"] = t.r;
  j["s"] = t.s;
  j["tau"] = t.tau;
  j["b0_delta"] = t.b0_delta;
  j["b0_delta_minus"] = t.b0_delta_minus;
  return j;
}

const std::vector<std::string> kCatalogColumns = {
    "pairs", "lambda", "ind", "M", "I", "r", "s", "tau", "b0_delta",
    "b0_delta_minus"};

std::string cell(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_of(const std::vector<json>& records,
                   const std::vector<std::string>& cols) {
  std::string out;
  for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& r : records) {
    for (size_t i = 0; i < cols.size(); ++i)
      out += (i ? "," : "") + csv_field(cell(r.at(cols[i])));
    out += '\n';
  }
  return out;
}

std::string table_of(const std::vector<json>& records,
                     const std::vector<std::string>& cols) {
  std::vector<size_t> width(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const auto& r : records)
    for (size_t i = 0; i < cols.size(); ++i)
      width[i] = std::max(width[i], cell(r.at(cols[i])).size());
  std::string out;
  auto row = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out += '\n';
  };
  row(cols);
  for (const auto& r : records) {
    std::vector<std::string> cells;
    for (const auto& c : cols) cells.push_back(cell(r.at(c)));
    row(cells);
  }
  return out;
}

std::string jsonl_of(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

std::string render_records(const std::vector<json>& records,
                           const std::vector<std::string>& cols, Format f) {
  switch (f) {
    case Format::json: return jsonl_of(records);
    case Format::csv: return csv_of(records, cols);
    default: return table_of(records, cols);
  }
}

} // namespace

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw invalid_args("unknown format: " + s);
}

std::string render_catalog(const std::vector<CuspType>& types, Format f) {
  std::vector<json> recs;
  for (const auto& t : types) recs.push_back(cusp_record(t));
  return render_records(recs, kCatalogColumns, f);
}

std::string render_invariants(const CuspType& t, Format f) {
  json j = cusp_record(t);
  j["tau_star"] = t.tau_star;
  j["delta_minus"] = rat_str(t.delta_minus);
  j["semi_ordinary"] = t.semi_ordinary;
  {
    std::string mu;
    for (size_t i = 0; i < t.multiplicities.size(); ++i)
      mu += (i ? "," : "") + std::to_string(t.multiplicities[i]);
    j["multiplicities"] = "(" + mu + ")";
  }
  if (f == Format::json) return j.dump() + "\n";
  if (f == Format::csv) {
    std::vector<std::string> cols;
    for (auto it = j.begin(); it != j.end(); ++it) cols.push_back(it.key());
    return csv_of({j}, cols);
  }
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out += it.key() + " = " + cell(it.value()) + "\n";
  return out;
}

std::string render_survey(const std::vector<SurveyRow>& rows, Format f) {
  std::vector<json> recs;
  for (const auto& r : rows) {
    json j;
    j["divisor"] = chain_str(r.expansion);
    j["pairs"] = r.type.pairs_text();
    j["lambda"] = r.type.lambda;
    j["ind"] = rat_str(r.type.ind);
    recs.push_back(std::move(j));
  }
  return render_records(recs, {"divisor", "pairs", "lambda", "ind"}, f);
}

std::string render_classification(const ClassificationResult& res, int cusps,
                                  Format f) {
  std::vector<json> recs;
  for (const auto& c : res.cases) {
    json j;
    j["case"] = c.label;
    j["cusps"] = c.cfg.pair_texts();
    j["d"] = c.d;
    j["p2"] = c.p2;
    j["filters"] = {{"hurwitz", c.hurwitz.pass ? "pass" : "fail"},
                    {"matsuoka_sakai", c.matsuoka_sakai.pass ? "pass" : "fail"}};
    j["status"] = c.survivor ? "survivor" : "eliminated";
    if (!c.audit.empty()) j["audit"] = c.audit;
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.hurwitz.pass) j["witness"] = c.hurwitz.witness;
    if (!c.matsuoka_sakai.pass) j["ms_witness"] = c.matsuoka_sakai.witness;
    recs.push_back(std::move(j));
  }
  if (f == Format::json) {
    json top;
    top["cusps"] = cusps;
    top["cases"] = recs;
    top["assignments_examined"] = res.assignments_examined;
    json tuples = json::array();
    for (const auto& [p2, t] : res.tuples)
      tuples.push_back({{"p2", p2}, {"lambda", t}});
    top["tuples"] = tuples;
    return top.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "feasible lambda tuples (" << res.tuples.size() << "):\n";
  for (const auto& [p2, t] : res.tuples) {
    out << "  p2=" << p2 << " (";
    for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << ")\n";
  }
  out << "assignments examined: " << res.assignments_examined << "\n";
  out << "cases passing the arithmetic filters: " << res.cases.size() << "\n";
  for (const auto& c : res.cases) {
    out << "  (" << c.label << ") ";
    for (const auto& p : c.cfg.pair_texts()) out << p << " ";
    out << "(d,p2)=(" << c.d << "," << c.p2 << ")"
        << " hurwitz=" << (c.hurwitz.pass ? "pass" : "fail")
        << " matsuoka_sakai=" << (c.matsuoka_sakai.pass ? "pass" : "fail")
        << " -> " << (c.survivor ? "survivor" : "eliminated");
    if (!c.audit.empty()) out << " [audit " << c.audit << "]";
    out << "\n";
  }
  if (f == Format::csv) {
    std::vector<std::string> cols = {"case", "cusps", "d", "p2", "hurwitz",
                                     "matsuoka_sakai", "status"};
    std::vector<json> rows;
    for (const auto& c : res.cases) {
      json j;
      j["case"] = c.label;
      std::string cs;
      for (const auto& p : c.cfg.pair_texts()) cs += p;
      j["cusps"] = cs;
      j["d"] = c.d;
      j["p2"] = c.p2;
      j["hurwitz"] = c.hurwitz.pass ? "pass" : "fail";
      j["matsuoka_sakai"] = c.matsuoka_sakai.pass ? "pass" : "fail";
      j["status"] = c.survivor ? "survivor" : "eliminated";
      rows.push_back(std::move(j));
    }
    return csv_of(rows, cols);
  }
  return out.str();
}

std::string render_audit(const AuditReport& rep, Format f) {
  if (f == Format::json) {
    json j;
    j["case"] = std::string(1, rep.id);
    json q;
    for (const auto& [name, value] : rep.quantities) q[name] = rat_str(value);
    j["quantities"] = q;
    j["comparison"] = rep.comparison;
    j["contradiction"] = rep.contradiction;
    return j.dump(2) + "\n";
  }
  std::string out = "audit case (" + std::string(1, rep.id) + ")\n";
  for (const auto& [name, value] : rep.quantities)
    out += "  " + name + " = " + rat_str(value) + "\n";
  out += "  " + rep.comparison + "\n";
  out += rep.contradiction ? "  contradiction: case eliminated\n"
                           : "  no contradiction\n";
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string manifest_json(const RunManifest& m) {
  json j;
  j["tool_version"] = m.version;
  j["command_line"] = m.command_line;
  json in = json::object();
  for (const auto& [name, digest] : m.input_digests) in[name] = digest;
  j["input_digests"] = in;
  j["output_digest"] = m.output_digest;
  j["wall_ms"] = m.wall_ms;
  return j.dump();
}

} // namespace rcc
