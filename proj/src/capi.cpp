#include "fh/fh.h"

#include "commands.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

struct fh_filtration {
  fh::LoadedSpec spec;
};

struct fh_report {
  std::string text;
};

namespace {

thread_local std::string last_error;

fh_status fail(fh_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs `body` and maps exceptions onto status codes.
template <class Body>
fh_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fh::SpecError& e) {
    return fail(FH_ERR_PARSE, e.what());
  } catch (const fh::UsageError& e) {
    return fail(FH_ERR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FH_ERR_INTERNAL, "unknown error");
  }
}

fh_status emit(const fh::CommandResult& r, fh_report** out) {
  *out = new fh_report{r.report.dump(2) + "\n"};
  return r.outcome == fh::Outcome::Ok ? FH_OK : FH_NEGATIVE;
}

std::size_t count(int64_t v, const char* what) {
  if (v < 0) throw fh::UsageError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

std::optional<std::size_t> bound(int64_t v) {
  if (v == FH_DEFAULT_BOUND) return std::nullopt;
  return count(v, "max-path-len");
}

#define FH_CHECK_ARGS(cond)                                              \
  do {                                                                   \
    if (!(cond)) return fail(FH_ERR_USAGE, "null argument");             \
  } while (0)

}  // namespace

extern "C" {

const char* fh_version(void) { return fh::kToolVersion; }

const char* fh_last_error(void) { return last_error.c_str(); }

fh_status fh_filtration_load_file(const char* path, fh_filtration** out) {
  FH_CHECK_ARGS(path && out);
  return guarded([&] {
    *out = new fh_filtration{fh::load_spec_file(path)};
    return FH_OK;
  });
}

fh_status fh_filtration_load_json(const char* text, size_t len, fh_filtration** out) {
  FH_CHECK_ARGS(text && out);
  return guarded([&] {
    *out = new fh_filtration{fh::parse_spec(std::string_view(text, len))};
    return FH_OK;
  });
}

void fh_filtration_free(fh_filtration* f) { delete f; }

fh_status fh_filtration_canonical_json(const fh_filtration* f, char** out) {
  FH_CHECK_ARGS(f && out);
  return guarded([&] {
    const std::string text = fh::canonical_text(fh::to_spec_json(f->spec.filtration));
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return FH_OK;
  });
}

void fh_string_free(char* s) { std::free(s); }

fh_status fh_validate(const fh_filtration* f, fh_report** out) {
  FH_CHECK_ARGS(f && out);
  return guarded([&] { return emit(fh::run_validate(f->spec), out); });
}

fh_status fh_martingale(const fh_filtration* f, int64_t max_path_len, int basis, fh_report** out) {
  FH_CHECK_ARGS(f && out);
  return guarded([&] {
    fh::MartingaleOptions opts{bound(max_path_len), basis != 0};
    return emit(fh::run_martingale(f->spec, opts), out);
  });
}

fh_status fh_complex(const fh_filtration* f, const char* simplex, int64_t max_degree, int basis, fh_report** out) {
  FH_CHECK_ARGS(f && simplex && out);
  return guarded([&] {
    if (max_degree < 1) throw fh::UsageError("max-degree must be ≥ 1");
    fh::ComplexOptions opts{simplex, static_cast<std::size_t>(max_degree), basis != 0};
    return emit(fh::run_complex(f->spec, opts), out);
  });
}

fh_status fh_holonomy(const fh_filtration* f, const char* simplex, fh_report** out) {
  FH_CHECK_ARGS(f && simplex && out);
  return guarded([&] { return emit(fh::run_holonomy(f->spec, simplex), out); });
}

fh_status fh_scan(const fh_filtration* f, int64_t max_len, int64_t limit, fh_report** out) {
  FH_CHECK_ARGS(f && out);
  return guarded([&] {
    fh::ScanOptions opts{count(max_len, "max-len"), count(limit, "limit")};
    return emit(fh::run_scan(f->spec, opts), out);
  });
}

fh_status fh_naive_check(const fh_filtration* f, int64_t degree, int64_t max_path_len, fh_report** out) {
  FH_CHECK_ARGS(f && out);
  return guarded([&] {
    fh::NaiveOptions opts{count(degree, "degree"), bound(max_path_len)};
    return emit(fh::run_naive_check(f->spec, opts), out);
  });
}

const char* fh_report_json(const fh_report* r) { return r ? r->text.c_str() : ""; }

void fh_report_free(fh_report* r) { delete r; }

}  // extern "C"
