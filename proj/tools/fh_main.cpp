// fh command-line tool. Talks to the library only through the C API.
#include "fh/fh.h"
#include "text_report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code(fh_status s) {
  switch (s) {
    case FH_OK: return kExitOk;
    case FH_NEGATIVE: return kExitNegative;
    case FH_ERR_PARSE:
    case FH_ERR_USAGE: return kExitUsage;
    case FH_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

int error(fh_status s) {
  std::fprintf(stderr, "fh: error: %s\n", fh_last_error());
  return exit_code(s);
}

struct Args {
  std::string spec;
  std::string simplex;
  std::string format = "json";
  int64_t max_degree = 2;
  int64_t max_path_len = FH_DEFAULT_BOUND;
  int64_t max_len = 3;
  int64_t limit = 1000;
  int64_t degree = 1;
  bool basis = false;
};

// Writes the report in one piece so a partial report never reaches stdout.
int emit(fh_status s, fh_report* report, const std::string& format) {
  std::string text = fh_report_json(report);
  fh_report_free(report);
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
    if (format == "text") text = render_text(parsed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fh: error: cannot render report: %s\n", e.what());
    return kExitInternal;
  }
  std::fwrite(text.data(), 1, text.size(), stdout);
  std::fflush(stdout);
  if (s == FH_NEGATIVE) {
    const auto& p = parsed["payload"];
    const std::string why = p.contains("error") ? p["error"].get<std::string>() : "invalid filtration";
    std::fprintf(stderr, "fh: %s\n", why.c_str());
  }
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact transport cohomology and loop holonomy for finite probability filtrations", "fh"};
  app.set_version_flag("--version", std::string(fh_version()));
  app.require_subcommand(1);

  Args a;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("spec", a.spec, "Filtration spec (JSON)")->required();
    cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto path_bound = [&](CLI::App* cmd) {
    cmd->add_option("--max-path-len", a.max_path_len, "Bound on composite path length (free mode)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check the filtration axioms");
  common(validate);

  auto* martingale = app.add_subcommand("martingale", "Dimension (and basis) of the martingale space");
  common(martingale);
  path_bound(martingale);
  martingale->add_flag("--basis", a.basis, "Print a kernel basis");

  auto* complex = app.add_subcommand("complex", "Sigma-gauge cochain complex and its cohomology");
  common(complex);
  complex->add_option("--simplex", a.simplex, "Comma-separated composable arrows")->required();
  complex->add_option("--max-degree", a.max_degree, "Highest cochain degree");
  complex->add_flag("--basis", a.basis, "Print cocycle bases");

  auto* holonomy = app.add_subcommand("holonomy", "Classify the holonomy of one loop");
  common(holonomy);
  holonomy->add_option("--simplex", a.simplex, "Comma-separated composable arrows forming a loop")->required();

  auto* scan = app.add_subcommand("scan", "Classify every based loop up to a length");
  common(scan);
  scan->add_option("--max-len", a.max_len, "Longest loop, in arrows")->check(CLI::NonNegativeNumber);
  scan->add_option("--limit", a.limit, "Stop after this many loops")->check(CLI::NonNegativeNumber);

  auto* naive = app.add_subcommand("naive-check", "Test whether the naive mu-chain squares to zero");
  common(naive);
  naive->add_option("--degree", a.degree, "Degree n of the composite delta^{n+1} delta^n");
  path_bound(naive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "fh: error: %s\n", e.what());
    std::fprintf(stderr, "Run with --help for more information.\n");
    return kExitUsage;
  }

  fh_filtration* f = nullptr;
  if (fh_status s = fh_filtration_load_file(a.spec.c_str(), &f); s != FH_OK) return error(s);

  fh_report* report = nullptr;
  fh_status s = FH_ERR_INTERNAL;
  if (*validate) {
    s = fh_validate(f, &report);
  } else if (*martingale) {
    s = fh_martingale(f, a.max_path_len, a.basis, &report);
  } else if (*complex) {
    s = fh_complex(f, a.simplex.c_str(), a.max_degree, a.basis, &report);
  } else if (*holonomy) {
    s = fh_holonomy(f, a.simplex.c_str(), &report);
  } else if (*scan) {
    s = fh_scan(f, a.max_len, a.limit, &report);
  } else if (*naive) {
    s = fh_naive_check(f, a.degree, a.max_path_len, &report);
  }
  fh_filtration_free(f);
  if (s != FH_OK && s != FH_NEGATIVE) return error(s);
  return emit(s, report, a.format);
}
