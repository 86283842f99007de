#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylwalks/weylwalks.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { ww_string_free(p); }
};

using ModelPtr = std::unique_ptr<ww_model, decltype(&ww_model_free)>;

int exitCode(ww_status s) {
  switch (s) {
    case WW_OK: return 0;
    case WW_ERR_ARG:
    case WW_ERR_PARSE: return 2;
    case WW_ERR_RESOURCE: return 3;
    case WW_ERR_PIPELINE: return 4;
  }
  return 4;
}

int fail(ww_status s) {
  std::cerr << "error: " << ww_last_error() << "\n";
  return exitCode(s);
}

// "WxH" -> (W, H)
bool parseGrid(const std::string& s, size_t& w, size_t& h) {
  auto x = s.find('x');
  if (x == std::string::npos) return false;
  try {
    size_t used = 0;
    unsigned long a = std::stoul(s.substr(0, x), &used);
    if (used != x) return false;
    unsigned long b = std::stoul(s.substr(x + 1), &used);
    if (used != s.size() - x - 1) return false;
    w = a;
    h = b;
    return w > 0 && h > 0;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Tandem and Double Tandem walks in the A2 Weyl chamber: exact counts and asymptotics"};
  app.require_subcommand(1);
  unsigned precision = 0;
  app.add_option("--precision", precision, "Working precision in bits (default: WEYLWALKS_PRECISION or 106)")
      ->check(CLI::Range(16u, 65536u));

  std::string model, a, b;
  size_t maxN = 0;

  auto* count = app.add_subcommand("count", "Exact weighted count q(n)");
  size_t n = 0;
  bool endpoints = false;
  count->add_option("model", model, "tandem | double-tandem")->required();
  count->add_option("a", a, "Weight a as p/q")->required();
  count->add_option("b", b, "Weight b as p/q")->required();
  count->add_option("n", n, "Walk length")->required();
  count->add_flag("--endpoints", endpoints, "Print the unweighted endpoint table as CSV i,j,count");
  count->add_option("--max-n", maxN, "Largest length the oracle may compute");

  auto* asym = app.add_subcommand("asymptotics", "Leading asymptotics gamma rho^n n^-r");
  bool json = false;
  asym->add_option("model", model, "tandem | double-tandem")->required();
  asym->add_option("a", a, "Weight a as p/q")->required();
  asym->add_option("b", b, "Weight b as p/q")->required();
  asym->add_flag("--json", json, "Print JSON");

  auto* validate = app.add_subcommand("validate", "Compare the asymptotic estimate with exact counts");
  std::vector<size_t> lengths{250, 500, 1000, 2000};
  double bound = 0.02;
  validate->add_option("model", model, "tandem | double-tandem")->required();
  validate->add_option("a", a, "Weight a as p/q")->required();
  validate->add_option("b", b, "Weight b as p/q")->required();
  validate->add_option("--n", lengths, "Comma-separated walk lengths")->delimiter(',')->capture_default_str();
  validate->add_option("--bound", bound, "Largest accepted relative error at the last length")->capture_default_str();
  validate->add_option("--max-n", maxN, "Largest length the oracle may compute");

  auto* sweepCmd = app.add_subcommand("sweep", "Regime diagram data as CSV a,b,regime,rho,rho_exact,r");
  std::string grid = "80x80", range = "0:4";
  sweepCmd->add_option("model", model, "tandem | double-tandem")->required();
  sweepCmd->add_option("--grid", grid, "Grid size WxH")->capture_default_str();
  sweepCmd->add_option("--range", range, "Weight range lo:hi; grid points lie in (lo, hi]")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (precision) ww_set_precision(precision);

  if (*sweepCmd) {
    size_t w = 0, h = 0;
    if (!parseGrid(grid, w, h)) {
      std::cerr << "error: --grid expects WxH, got '" << grid << "'\n";
      return 2;
    }
    auto colon = range.find(':');
    if (colon == std::string::npos) {
      std::cerr << "error: --range expects lo:hi, got '" << range << "'\n";
      return 2;
    }
    Owned csv;
    ww_status s = ww_sweep(model.c_str(), w, h, range.substr(0, colon).c_str(), range.substr(colon + 1).c_str(), &csv.p);
    if (s != WW_OK) return fail(s);
    std::fputs(csv.p, stdout);
    return 0;
  }

  ww_model* raw = nullptr;
  if (ww_status s = ww_model_new(model.c_str(), a.c_str(), b.c_str(), &raw); s != WW_OK) return fail(s);
  ModelPtr m(raw, ww_model_free);

  if (*count) {
    Owned out;
    ww_status s = endpoints ? ww_count_endpoints(m.get(), n, maxN, &out.p) : ww_count_q(m.get(), n, maxN, &out.p);
    if (s != WW_OK) return fail(s);
    std::fputs(out.p, stdout);
    if (!endpoints) std::fputc('\n', stdout);
    return 0;
  }

  if (*asym) {
    ww_estimate* est = nullptr;
    if (ww_status s = ww_asymptotics(m.get(), &est); s != WW_OK) return fail(s);
    std::unique_ptr<ww_estimate, decltype(&ww_estimate_free)> guard(est, ww_estimate_free);
    Owned out;
    ww_status s = json ? ww_estimate_json(est, &out.p) : ww_estimate_text(est, &out.p);
    if (s != WW_OK) return fail(s);
    std::fputs(out.p, stdout);
    if (json) std::fputc('\n', stdout);
    return 0;
  }

  Owned out;
  int passed = 0;
  ww_status s = ww_validate(m.get(), lengths.data(), lengths.size(), bound, maxN, &out.p, &passed);
  if (s != WW_OK) return fail(s);
  std::fputs(out.p, stdout);
  std::fputc('\n', stdout);
  return passed ? 0 : 1;
}
