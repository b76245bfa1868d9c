#include "fh/fh.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

std::string spec(const char* name) { return std::string(FH_SPECS_DIR) + "/" + name; }

struct Loaded {
  fh_filtration* f = nullptr;
  explicit Loaded(const char* name) { REQUIRE(fh_filtration_load_file(spec(name).c_str(), &f) == FH_OK); }
  ~Loaded() { fh_filtration_free(f); }
};

json take(fh_report* r) {
  REQUIRE(r != nullptr);
  json j = json::parse(fh_report_json(r));
  fh_report_free(r);
  return j;
}

}  // namespace

TEST_CASE("load and validate") {
  Loaded s("ex52.json");
  fh_report* r = nullptr;
  CHECK(fh_validate(s.f, &r) == FH_OK);
  const json j = take(r);
  CHECK(j["tool"] == "fh");
  CHECK(j["version"] == fh_version());
  CHECK(j["command"] == "validate");
  CHECK(j["status"] == "ok");
  CHECK(j["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
  CHECK(j["payload"]["valid"] == true);
}

TEST_CASE("parse errors surface through fh_last_error") {
  fh_filtration* f = nullptr;
  const std::string bad = R"({"mode": "free", "objects": [{"name": "t", "atoms": ["a"], "measure": {"a": "9/10"}}]})";
  CHECK(fh_filtration_load_json(bad.data(), bad.size(), &f) == FH_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::string(fh_last_error()).find("mass ≠ 1") != std::string::npos);
  CHECK(fh_filtration_load_file("/nonexistent/spec.json", &f) == FH_ERR_PARSE);
  CHECK(fh_validate(nullptr, nullptr) == FH_ERR_USAGE);
}

TEST_CASE("complex and holonomy") {
  Loaded s("ex51.json");
  fh_report* r = nullptr;
  CHECK(fh_complex(s.f, "i1,i2", 2, 0, &r) == FH_OK);
  const json j = take(r);
  const auto& h = j["payload"]["cohomology"];
  REQUIRE(h.size() == 3);
  CHECK(h[0]["H"] == 2);
  CHECK(h[1]["H"] == 0);
  CHECK(h[2]["H"] == 0);
  CHECK(fh_complex(s.f, "i1,i2", 0, 0, &r) == FH_ERR_USAGE);
  CHECK(std::string(fh_last_error()) == "max-degree must be ≥ 1");
  CHECK(fh_complex(s.f, "i1,nope", 2, 0, &r) == FH_ERR_USAGE);

  CHECK(fh_holonomy(s.f, "i1,i2", &r) == FH_NEGATIVE);
  CHECK(take(r)["payload"]["error"].get<std::string>().find("not a loop") != std::string::npos);
  CHECK(fh_holonomy(s.f, "i2,i1", &r) == FH_NEGATIVE);
  CHECK(take(r)["payload"]["error"].get<std::string>().find("breaks between i2") != std::string::npos);

  Loaded loop("ex52.json");
  CHECK(fh_holonomy(loop.f, "i1,i2,i3", &r) == FH_OK);
  const json hol = take(r)["payload"];
  CHECK(hol["classification"] == "Nontrivial");
  CHECK(hol["homological_arbitrage"] == true);
  CHECK(hol["holonomy"]["entries"] == json::parse(R"([["0","0"],["1/2","1/2"]])"));
}

TEST_CASE("scan, martingale and naive check") {
  Loaded s("ex52.json");
  fh_report* r = nullptr;
  CHECK(fh_scan(s.f, 3, 1000, &r) == FH_OK);
  const json scan = take(r);
  CHECK(scan["truncation"]["loop_length_bound"] == 3);
  CHECK(scan["payload"]["count"] == 6);
  CHECK(fh_scan(s.f, 3, 2, &r) == FH_OK);
  CHECK(take(r)["truncation"]["loop_limit"] == 2);

  CHECK(fh_martingale(s.f, FH_DEFAULT_BOUND, 0, &r) == FH_OK);
  const json m = take(r);
  CHECK(m["payload"]["path_bound"] == 6);
  CHECK(m["truncation"]["arrow_path_bound"] == 6);

  Loaded w("witness_naive.json");
  CHECK(fh_martingale(w.f, FH_DEFAULT_BOUND, 1, &r) == FH_OK);
  const json wm = take(r);
  CHECK(wm["payload"]["dimension"] == 2);
  CHECK(wm["payload"]["basis"].size() == 2);
  CHECK(wm["truncation"].empty());
  CHECK(fh_naive_check(w.f, 1, FH_DEFAULT_BOUND, &r) == FH_OK);
  const json n = take(r)["payload"];
  CHECK(n["is_zero"] == false);
  CHECK(n["witness"]["value"]["values"] == json::parse(R"(["0","-2"])"));
  CHECK(n["witness"]["tau"]["arrows"] == json::parse(R"(["i1","id_t1"])"));
}

TEST_CASE("invalid filtrations are negative") {
  const std::string text = R"({"mode": "free", "objects": [
    {"name": "s", "atoms": ["0", "1"], "measure": {"0": "0", "1": "1"}},
    {"name": "t", "atoms": ["0", "1"], "measure": {"0": "1/2", "1": "1/2"}}],
    "arrows": [{"name": "i", "src": "s", "dst": "t", "map": {"0": "0", "1": "0"}}]})";
  fh_filtration* f = nullptr;
  REQUIRE(fh_filtration_load_json(text.data(), text.size(), &f) == FH_OK);
  fh_report* r = nullptr;
  CHECK(fh_validate(f, &r) == FH_NEGATIVE);
  const json j = take(r);
  CHECK(j["status"] == "negative");
  CHECK(j["payload"]["violations"][0]["kind"] == "null_preservation");
  CHECK(fh_martingale(f, FH_DEFAULT_BOUND, 0, &r) == FH_NEGATIVE);
  fh_report_free(r);
  fh_filtration_free(f);
}

TEST_CASE("canonical json") {
  Loaded s("witness_naive.json");
  char* text = nullptr;
  REQUIRE(fh_filtration_canonical_json(s.f, &text) == FH_OK);
  fh_filtration* again = nullptr;
  CHECK(fh_filtration_load_json(text, std::string(text).size(), &again) == FH_OK);
  char* twice = nullptr;
  REQUIRE(fh_filtration_canonical_json(again, &twice) == FH_OK);
  CHECK(std::string(text) == std::string(twice));
  fh_string_free(text);
  fh_string_free(twice);
  fh_filtration_free(again);
}
