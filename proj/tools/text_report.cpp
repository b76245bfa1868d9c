#include "text_report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace {

using json = nlohmann::json;
using Table = std::vector<std::vector<std::string>>;

std::string str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string join(const json& arr, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + str(arr[i]);
  return out;
}

// Left-aligned columns, first row is the header.
void print_table(std::ostream& out, const Table& t, const std::string& indent = "  ") {
  if (t.empty()) return;
  std::vector<std::size_t> width(t[0].size(), 0);
  for (const auto& row : t) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (std::size_t r = 0; r < t.size(); ++r) {
    out << indent;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      out << t[r][c];
      if (c + 1 < t[r].size()) out << std::string(width[c] - t[r][c].size() + 2, ' ');
    }
    out << '\n';
    if (r == 0) {
      out << indent;
      for (std::size_t c = 0; c < width.size(); ++c) out << std::string(width[c], '-') << (c + 1 < width.size() ? "  " : "");
      out << '\n';
    }
  }
}

std::string vector_text(const json& v) {
  if (v.is_null()) return "-";
  std::string out = "(";
  for (std::size_t i = 0; i < v["atoms"].size(); ++i) {
    out += (i ? ", " : "") + str(v["atoms"][i]) + ": " + str(v["values"][i]);
  }
  return out + ")";
}

std::string simplex_text(const json& s) {
  if (s["arrows"].empty()) return "<" + str(s["objects"][0]) + ">";
  return join(s["arrows"], ", ") + "  [" + join(s["objects"], " -> ") + "]";
}

void matrix(std::ostream& out, const json& m) {
  Table t{{""}};
  for (const auto& c : m["cols"]) t[0].push_back(str(c));
  for (std::size_t r = 0; r < m["rows"].size(); ++r) {
    std::vector<std::string> row{str(m["rows"][r])};
    for (const auto& x : m["entries"][r]) row.push_back(str(x));
    t.push_back(row);
  }
  print_table(out, t, "    ");
}

void gauge(std::ostream& out, const json& g) {
  Table t{{"pos", "object", "gauge measure", "original measure"}};
  for (const auto& p : g) {
    std::string gm, om;
    for (std::size_t i = 0; i < p["atoms"].size(); ++i) {
      gm += (i ? ", " : "") + str(p["gauge_measure"][i]);
      om += (i ? ", " : "") + str(p["original_measure"][i]);
    }
    t.push_back({str(p["position"]), str(p["object"]), gm, om});
  }
  print_table(out, t);
}

void holonomy(std::ostream& out, const json& h) {
  out << "loop " << simplex_text(h["simplex"]) << "\n";
  out << "  classification: " << str(h["classification"])
      << (h["homological_arbitrage"].get<bool>() ? " (homological arbitrage)" : "") << "\n";
  out << "  initial:  " << vector_text(h["initial_measure"]) << "\n";
  out << "  terminal: " << vector_text(h["terminal_measure"]) << "\n";
  out << "  relation: " << str(h["relation"]) << "\n";
  out << "  distortion: " << vector_text(h["distortion"]) << "\n";
  out << "  holonomy:\n";
  matrix(out, h["holonomy"]);
  gauge(out, h["gauge"]);
  Table t{{"pos", "object", "relation", "derivative"}};
  for (const auto& d : h["internal_distortion"]) {
    t.push_back({str(d["position"]), str(d["object"]), str(d["relation"]), vector_text(d["derivative"])});
  }
  out << "  internal distortion:\n";
  print_table(out, t, "    ");
}

void payload(std::ostream& out, const std::string& command, const json& p) {
  if (p.contains("error")) {
    out << "error: " << str(p["error"]) << "\n";
    if (p.contains("violations")) {
      for (const auto& v : p["violations"]) out << "  [" << str(v["kind"]) << "] " << str(v["message"]) << "\n";
    }
    return;
  }
  if (command == "validate") {
    out << (p["valid"].get<bool>() ? "valid" : "invalid") << " " << str(p["mode"]) << " filtration, "
        << str(p["objects"]) << " objects, " << str(p["arrows"]) << " arrows\n";
    for (const auto& v : p["violations"]) out << "  [" << str(v["kind"]) << "] " << str(v["message"]) << "\n";
  } else if (command == "martingale") {
    out << "martingale dimension: " << str(p["dimension"]) << "\n";
    if (p.contains("path_bound")) out << "path bound: " << str(p["path_bound"]) << "\n";
    out << "arrows (" << str(p["arrow_count"]) << "): " << join(p["arrow_set"], ", ") << "\n";
    if (p.contains("basis")) {
      for (std::size_t b = 0; b < p["basis"].size(); ++b) {
        out << "basis vector " << b << ":\n";
        for (const auto& c : p["basis"][b]) out << "  " << str(c["object"]) << " " << vector_text(c) << "\n";
      }
    }
  } else if (command == "complex") {
    out << "simplex " << simplex_text(p["simplex"]) << ", max degree " << str(p["max_degree"]) << "\n";
    gauge(out, p["gauge"]);
    Table t{{"n", "indices", "blocks", "dim C^n"}};
    for (const auto& d : p["degrees"]) {
      t.push_back({str(d["degree"]), str(d["index_count"]), join(d["block_dims"], " "), str(d["dim"])});
    }
    print_table(out, t);
    Table h{{"n", "Z", "B", "H"}};
    for (const auto& c : p["cohomology"]) h.push_back({str(c["degree"]), str(c["Z"]), str(c["B"]), str(c["H"])});
    print_table(out, h);
    for (const auto& s : p["delta_squared"]) {
      out << "  delta^" << str(s["n"]).c_str() << " composite: " << str(s["status"]) << "\n";
    }
    out << "  " << str(p["degree_zero_convention"]) << "\n";
  } else if (command == "holonomy") {
    holonomy(out, p);
  } else if (command == "scan") {
    out << str(p["count"]) << " loops up to length " << str(p["max_len"]) << "\n";
    Table t{{"loop", "classification", "relation"}};
    for (const auto& h : p["loops"]) {
      t.push_back({simplex_text(h["simplex"]), str(h["classification"]), str(h["relation"])});
    }
    print_table(out, t);
  } else if (command == "naive-check") {
    out << "degree " << str(p["degree"]) << ": composite is " << (p["is_zero"].get<bool>() ? "zero" : "nonzero")
        << " (simplices per degree: " << join(p["nerve_sizes"], " / ") << ")\n";
    if (!p["witness"].is_null()) {
      const json& w = p["witness"];
      out << "  tau:     " << simplex_text(w["tau"]) << "\n";
      out << "  cochain: unit at " << str(w["cochain"]["object"]) << ":" << str(w["cochain"]["atom"]) << " on "
          << simplex_text(w["cochain"]["simplex"]) << "\n";
      out << "  value:   " << vector_text(w["value"]) << "\n";
    }
  } else {
    out << p.dump(2) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  out << str(report["tool"]) << " " << str(report["version"]) << "  " << str(report["command"]) << "  "
      << str(report["input_digest"]) << "\n";
  out << "status: " << str(report["status"]) << "\n";
  const json& trunc = report["truncation"];
  if (trunc.empty()) {
    out << "truncation: none (exact)\n";
  } else {
    out << "truncation:";
    for (const auto& [key, value] : trunc.items()) out << " " << key << "=" << str(value);
    out << "\n";
  }
  out << "\n";
  payload(out, str(report["command"]), report["payload"]);
  return out.str();
}
