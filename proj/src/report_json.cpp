#include "repgrowth/report_json.hpp"

#include <algorithm>

namespace repgrowth {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

mpz_class mpz_from(const std::string& s) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("bad integer '" + s + "'");
  return v;
}

}  // namespace

Verdict parse_verdict(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "unknown") return Verdict::unknown;
  throw ParseError("unknown verdict '" + s + "'");
}

Json to_json(const Interval& x) {
  Json j;
  j["kind"] = "interval";
  j["lo"] = x.lo_string(20);
  j["hi"] = x.hi_string(20);
  j["lo_exact"] = x.lo_hex();
  j["hi_exact"] = x.hi_hex();
  j["precision"] = x.precision();
  return j;
}

Interval interval_from_json(const Json& j) {
  if (str_field(j, "kind") != "interval") throw ParseError("expected an interval");
  const Json& p = field(j, "precision");
  if (!p.is_number_integer()) throw ParseError("bad precision");
  try {
    return Interval::from_hex(str_field(j, "lo_exact"), str_field(j, "hi_exact"), p.get<mpfr_prec_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Quantity& q) {
  Json j;
  switch (q.kind) {
    case QuantityKind::exact:
      j["kind"] = "exact";
      j["value"] = q.exact.get_str();
      break;
    case QuantityKind::interval:
      j = to_json(*q.interval);
      break;
    case QuantityKind::external:
      j["kind"] = "external";
      break;
  }
  j["text"] = q.text;
  return j;
}

Quantity quantity_from_json(const Json& j) {
  const std::string kind = str_field(j, "kind");
  const std::string text = str_field(j, "text");
  if (kind == "exact") return Quantity::of(mpz_from(str_field(j, "value")), text);
  if (kind == "interval") return Quantity::of(interval_from_json(j), text);
  if (kind == "external") return Quantity::external(text);
  throw ParseError("unknown quantity kind '" + kind + "'");
}

Json to_json(const Certificate& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["relation"] = c.relation == Relation::less ? "<" : "<=";
  j["precision"] = c.precision;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.verdict = parse_verdict(str_field(j, "verdict"));
  const std::string rel = str_field(j, "relation");
  if (rel == "<") c.relation = Relation::less;
  else if (rel == "<=") c.relation = Relation::less_equal;
  else throw ParseError("unknown relation '" + rel + "'");
  c.precision = field(j, "precision").get<mpfr_prec_t>();
  c.lhs = interval_from_json(field(j, "lhs"));
  c.rhs = interval_from_json(field(j, "rhs"));
  return c;
}

Json to_json(const Weight& w) { return Json(w.coeffs); }

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("weight must be an array");
  std::vector<std::int64_t> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("weight coefficient is not an integer");
    c.push_back(v.get<std::int64_t>());
  }
  return Weight(std::move(c));
}

Json to_json(const WitnessChain& c) {
  Json j;
  j["source"] = to_json(c.source);
  j["target"] = to_json(c.target);
  j["root_coeffs"] = c.root_coeffs;
  return j;
}

WitnessChain chain_from_json(const Json& j) {
  WitnessChain c;
  c.source = weight_from_json(field(j, "source"));
  c.target = weight_from_json(field(j, "target"));
  c.root_coeffs = weight_from_json(field(j, "root_coeffs")).coeffs;
  return c;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["verdict"] = verdict_name(c.verdict);
  j["detail"] = c.detail;
  return j;
}

CheckResult check_from_json(const Json& j) {
  return {str_field(j, "id"), str_field(j, "statement"), parse_verdict(str_field(j, "verdict")),
          str_field(j, "detail")};
}

Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["value"] = to_json(r.value);
  j["valid"] = r.valid;
  j["guard_detail"] = r.guard_detail;
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  Json alts = Json::array();
  for (const auto& [k, q] : r.alternatives) alts.push_back({{"name", k}, {"value", to_json(q)}});
  j["alternatives"] = alts;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["assumptions"] = r.assumptions;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.name = str_field(j, "name");
  r.value = quantity_from_json(field(j, "value"));
  r.valid = field(j, "valid").get<bool>();
  r.guard_detail = str_field(j, "guard_detail");
  for (const auto& [k, v] : field(j, "inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  for (const auto& a : field(j, "alternatives")) r.alternatives.emplace_back(str_field(a, "name"), quantity_from_json(field(a, "value")));
  for (const auto& c : field(j, "checks")) r.checks.push_back(check_from_json(c));
  r.assumptions = field(j, "assumptions").get<std::vector<std::string>>();
  return r;
}

Json to_json(const Partition& p) {
  Json j;
  j["parts"] = p.parts();
  j["size"] = p.size();
  return j;
}

Partition partition_from_json(const Json& j) {
  try {
    Partition p(field(j, "parts").get<std::vector<int>>());
    if (p.size() != field(j, "size").get<int>()) throw ParseError("partition size mismatch");
    return p;
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const VerificationSuite& s) {
  Json j;
  j["suite"] = s.id;
  j["scale"] = scale_name(s.scale);
  Json summary = Json::object();
  for (auto v : {SuiteVerdict::pass, SuiteVerdict::fail, SuiteVerdict::unknown, SuiteVerdict::external_assumption})
    summary[suite_verdict_name(v)] =
        std::count_if(s.checks.begin(), s.checks.end(), [v](const SuiteCheck& c) { return c.verdict == v; });
  j["summary"] = summary;
  j["exit_code"] = suite_exit_code(s);
  Json checks = Json::array();
  for (const auto& c : s.checks)
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"verdict", suite_verdict_name(c.verdict)}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

VerificationSuite suite_from_json(const Json& j) {
  VerificationSuite s;
  s.id = str_field(j, "suite");
  try {
    s.scale = parse_scale(str_field(j, "scale"));
    for (const auto& c : field(j, "checks"))
      s.checks.push_back({str_field(c, "id"), str_field(c, "anchor"), parse_suite_verdict(str_field(c, "verdict")),
                          str_field(c, "detail")});
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(row[i]);
  }
  out += '\n';
}

}  // namespace

std::string write_csv(const Table& t) {
  std::string out;
  csv_row(out, t.columns);
  for (const auto& r : t.rows) {
    if (r.size() != t.columns.size()) throw std::invalid_argument("write_csv: ragged row");
    csv_row(out, r);
  }
  return out;
}

Table parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false, was_quoted = false;
  std::size_t i = 0;
  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    was_quoted = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      if (!cell.empty() || was_quoted) throw ParseError("csv: stray quote");
      quoted = was_quoted = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_cell();
      records.push_back(std::move(row));
      row.clear();
    } else {
      if (was_quoted) throw ParseError("csv: text after closing quote");
      cell += c;
    }
    ++i;
  }
  if (quoted) throw ParseError("csv: unterminated quote");
  if (!cell.empty() || !row.empty() || was_quoted) {
    end_cell();
    records.push_back(std::move(row));
  }
  if (records.empty()) throw ParseError("csv: missing header");
  Table t;
  t.columns = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.columns.size()) throw ParseError("csv: ragged row " + std::to_string(r));
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

}  // namespace repgrowth
