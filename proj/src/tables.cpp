#include "knotcalc/tables.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "knotcalc/goeritz.hpp"

namespace knotcalc {

using nlohmann::json;

std::vector<KnotRecord> load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  std::vector<KnotRecord> records;
  std::set<std::string> names;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    auto fail = [&](const std::string& what) -> void {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
    };
    if (!j.is_object()) fail("expected a JSON object");
    KnotRecord r;
    if (!j.contains("name") || !j["name"].is_string()) fail("missing name");
    r.name = j["name"].get<std::string>();
    if (r.name.empty()) fail("empty name");
    if (!names.insert(r.name).second) fail("duplicate name " + r.name);
    if (!j.contains("pd") || !j["pd"].is_string()) fail("missing pd");
    r.pd = j["pd"].get<std::string>();
    try {
      parse_pd(r.pd, r.name);
    } catch (const std::exception& e) {
      fail(std::string("invalid pd: ") + e.what());
    }
    auto opt_bool = [&](const char* key) -> std::optional<bool> {
      if (!j.contains(key) || j[key].is_null()) return std::nullopt;
      if (!j[key].is_boolean()) fail(std::string(key) + " must be boolean or null");
      return j[key].get<bool>();
    };
    auto opt_int = [&](const char* key) -> std::optional<int> {
      if (!j.contains(key) || j[key].is_null()) return std::nullopt;
      if (!j[key].is_number_integer()) fail(std::string(key) + " must be integer or null");
      return j[key].get<int>();
    };
    r.fibered = opt_bool("fibered");
    r.unknotting_number = opt_int("u");
    r.rank = opt_int("rank");
    r.tunnel_number = opt_int("tunnel");
    if (j.contains("delta") && !j["delta"].is_null()) {
      if (!j["delta"].is_string()) fail("delta must be string or null");
      r.reference_delta = j["delta"].get<std::string>();
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<IndexReport> run_pipeline(const std::vector<KnotRecord>& records,
                                      const PipelineOptions& options) {
  std::vector<IndexReport> reports;
  reports.reserve(records.size());
  for (const KnotRecord& rec : records) {
    IndexReport rep;
    rep.name = rec.name;
    rep.fibered = rec.fibered;
    try {
      KnotDiagram d = parse_pd(rec.pd, rec.name);
      AlexanderData a = alexander_matrix(wirtinger_presentation(d));
      rep.delta = alexander_polynomial(a);
      if (rec.reference_delta) {
        LaurentPoly ref = normalize_unit(parse_laurent(*rec.reference_delta));
        if (!(ref == rep.delta) && !(normalize_unit(ref.mirrored()) == rep.delta))
          throw std::runtime_error("reference delta mismatch: computed " +
                                   to_string(rep.delta));
      }
      std::vector<FieldSpec> battery = default_battery(rep.delta, options.primes);
      rep.m_bounds = nakanishi_bounds(a, battery);
      // Nontriviality is certified by a nontrivial Alexander polynomial or
      // ingested unknotting metadata.
      bool nontrivial = !rep.delta.is_one() ||
                        (rec.unknotting_number && *rec.unknotting_number >= 1);
      std::optional<int> hint;
      if (d.crossing_count() <= options.hint_crossing_limit && nontrivial)
        hint = options.hint_upper;
      MqResult mq = mq_bounds_traced(rep.m_bounds, rec.fibered, rec.unknotting_number,
                                     rec.rank, nontrivial, hint);
      rep.a_bounds = mq.a;
      rep.a_bounds_prior = mq.a_prior;
      rep.rules = std::move(mq.rules);
      // Screens: fibered flags must pass the monic test, and the Goeritz
      // determinant must agree with |Delta(-1)|.
      if (rec.fibered && *rec.fibered && !fibered_necessary(rep.delta))
        throw std::runtime_error("fibered flag fails the monic screen");
      Int det_fox = rep.delta.evaluate_at(-1);
      if (det_fox < 0) det_fox = -det_fox;
      Int det_goeritz = knot_determinant(d);
      if (det_fox != det_goeritz)
        throw std::runtime_error("determinant cross-check failed: |Delta(-1)| = " +
                                 det_fox.str() + ", Goeritz = " + det_goeritz.str());
    } catch (const std::exception& e) {
      rep.error = e.what();
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

const std::vector<std::string>& section4_determined_names() {
  static const std::vector<std::string> names = {
      "8_16",   "9_29",   "9_32",   "10_62",  "10_64",  "10_79",  "10_81",
      "10_85",  "10_89",  "10_94",  "10_96",  "10_100", "10_105", "10_106",
      "10_109", "10_110", "10_112", "10_116", "10_148", "10_149", "10_150",
      "10_151", "10_152", "10_153", "10_154", "10_158"};
  return names;
}

const std::vector<std::string>& section4_open_names() {
  static const std::vector<std::string> names = {
      "10_65",  "10_66",  "10_67",  "10_68",  "10_80",  "10_83",  "10_86",
      "10_87",  "10_90",  "10_92",  "10_93",  "10_97",  "10_108", "10_111",
      "10_117", "10_120", "10_121", "10_163", "10_166"};
  return names;
}

Section4Report reproduce_section4(const std::vector<IndexReport>& reports) {
  Section4Report out;
  for (const IndexReport& r : reports) {
    if (r.error) {
      out.mismatches.push_back({r.name, "pipeline error: " + *r.error});
      continue;
    }
    if (r.a_bounds_prior.tight()) continue;  // settled without fiberedness
    if (r.a_bounds.tight()) {
      if (r.a_bounds.lower == 1)
        out.determined_one.push_back(r.name);
      else if (r.a_bounds.lower == 2)
        out.determined_two.push_back(r.name);
      else
        out.mismatches.push_back({r.name, "unexpected tight value " +
                                              std::to_string(r.a_bounds.lower)});
    } else {
      out.open.push_back(r.name);
    }
  }
  auto sort_names = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end(), knot_name_less);
  };
  sort_names(out.determined_one);
  sort_names(out.determined_two);
  sort_names(out.open);

  auto compare = [&](const std::vector<std::string>& got,
                     const std::vector<std::string>& want, const std::string& label) {
    std::set<std::string> got_set(got.begin(), got.end());
    std::set<std::string> want_set(want.begin(), want.end());
    for (const auto& n : want)
      if (!got_set.count(n))
        out.mismatches.push_back({n, "expected in " + label + " but absent"});
    for (const auto& n : got)
      if (!want_set.count(n))
        out.mismatches.push_back({n, "present in " + label + " but not expected"});
  };
  compare(out.determined_one, section4_determined_names(), "determined-one list");
  compare(out.open, section4_open_names(), "open list");
  if (!out.determined_two.empty())
    for (const auto& n : out.determined_two)
      out.mismatches.push_back({n, "present in determined-two but not expected"});
  return out;
}

namespace {

json bounds_json(const IndexBounds& b) {
  json j;
  j["lower"] = b.lower;
  if (b.upper >= kNoUpperBound)
    j["upper"] = nullptr;
  else
    j["upper"] = b.upper;
  return j;
}

json report_json(const IndexReport& r) {
  json j;
  j["name"] = r.name;
  j["delta"] = to_string(r.delta);
  j["m_lower"] = r.m_bounds.lower;
  j["m_upper"] = r.m_bounds.upper;
  j["a_lower"] = r.a_bounds.lower;
  if (r.a_bounds.upper >= kNoUpperBound)
    j["a_upper"] = nullptr;
  else
    j["a_upper"] = r.a_bounds.upper;
  if (r.fibered)
    j["fibered"] = *r.fibered;
  else
    j["fibered"] = nullptr;
  json rules = json::array();
  for (const auto& rule : r.rules) {
    json rj;
    rj["rule"] = rule.rule;
    rj["detail"] = rule.detail;
    rules.push_back(rj);
  }
  j["rules"] = rules;
  if (r.error) j["error"] = *r.error;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

constexpr const char* kCsvHeader = "name,delta,m_lower,m_upper,a_lower,a_upper,fibered,rules";

std::string report_csv_row(const IndexReport& r) {
  std::ostringstream os;
  os << csv_escape(r.name) << ',' << csv_escape(to_string(r.delta)) << ','
     << r.m_bounds.lower << ',' << r.m_bounds.upper << ',' << r.a_bounds.lower << ',';
  if (r.a_bounds.upper >= kNoUpperBound)
    os << "";
  else
    os << r.a_bounds.upper;
  os << ',';
  os << (r.fibered ? (*r.fibered ? "true" : "false") : "");
  std::string rules;
  for (const auto& rule : r.rules) {
    if (!rules.empty()) rules += "; ";
    rules += rule.rule;
  }
  os << ',' << csv_escape(rules);
  return os.str();
}

std::string report_text(const IndexReport& r) {
  std::ostringstream os;
  os << r.name << ": delta = " << to_string(r.delta) << ", m in [" << r.m_bounds.lower
     << ", " << r.m_bounds.upper << "], a in [" << r.a_bounds.lower << ", ";
  if (r.a_bounds.upper >= kNoUpperBound)
    os << "?";
  else
    os << r.a_bounds.upper;
  os << "]";
  if (r.fibered) os << (*r.fibered ? ", fibered" : ", not fibered");
  if (!r.rules.empty()) {
    os << "  [";
    for (std::size_t i = 0; i < r.rules.size(); ++i) {
      if (i) os << ", ";
      os << r.rules[i].rule;
    }
    os << "]";
  }
  if (r.error) os << "  ERROR: " << *r.error;
  return os.str();
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format: " + name);
}

std::string report_emit(const IndexReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return report_json(report).dump() + "\n";
    case ReportFormat::Csv:
      return std::string(kCsvHeader) + "\n" + report_csv_row(report) + "\n";
    case ReportFormat::Text:
      return report_text(report) + "\n";
  }
  return {};
}

std::string report_emit(const std::vector<IndexReport>& reports, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      os << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv:
      os << kCsvHeader << "\n";
      for (const auto& r : reports) os << report_csv_row(r) << "\n";
      break;
    case ReportFormat::Text:
      for (const auto& r : reports) os << report_text(r) << "\n";
      break;
  }
  return os.str();
}

std::string report_emit(const Section4Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json j;
      j["determined_one"] = report.determined_one;
      j["determined_two"] = report.determined_two;
      j["open"] = report.open;
      json ms = json::array();
      for (const auto& m : report.mismatches) {
        json mj;
        mj["name"] = m.name;
        mj["reason"] = m.reason;
        ms.push_back(mj);
      }
      j["mismatches"] = ms;
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "name,classification\n";
      for (const auto& n : report.determined_one) os << csv_escape(n) << ",a=1\n";
      for (const auto& n : report.determined_two) os << csv_escape(n) << ",a=2\n";
      for (const auto& n : report.open) os << csv_escape(n) << ",open\n";
      for (const auto& m : report.mismatches)
        os << csv_escape(m.name) << "," << csv_escape("mismatch: " + m.reason) << "\n";
      return os.str();
    }
    case ReportFormat::Text: {
      std::ostringstream os;
      os << "MQ index determined to be 1 by fiberedness (" << report.determined_one.size()
         << " knots):\n  " << join_names(report.determined_one) << "\n";
      if (!report.determined_two.empty())
        os << "MQ index determined to be 2 by fiberedness (" << report.determined_two.size()
           << " knots):\n  " << join_names(report.determined_two) << "\n";
      os << "MQ index still open, a in [1, 2] (" << report.open.size() << " knots):\n  "
         << join_names(report.open) << "\n";
      if (!report.mismatches.empty()) {
        os << "Mismatches against the embedded lists:\n";
        for (const auto& m : report.mismatches) os << "  " << m.name << ": " << m.reason << "\n";
      } else {
        os << "Mismatches against the embedded lists: none\n";
      }
      return os.str();
    }
  }
  return {};
}

bool knot_name_less(const std::string& a, const std::string& b) {
  auto parse = [](const std::string& s) -> std::optional<std::pair<int, int>> {
    auto us = s.find('_');
    if (us == std::string::npos) return std::nullopt;
    try {
      std::size_t used = 0;
      int c = std::stoi(s.substr(0, us), &used);
      if (used != us) return std::nullopt;
      int i = std::stoi(s.substr(us + 1), &used);
      if (used != s.size() - us - 1) return std::nullopt;
      return std::pair<int, int>(c, i);
    } catch (...) {
      return std::nullopt;
    }
  };
  auto pa = parse(a), pb = parse(b);
  if (pa && pb) return *pa < *pb;
  if (pa) return true;   // table names before everything else
  if (pb) return false;
  return a < b;
}

}  // namespace knotcalc
