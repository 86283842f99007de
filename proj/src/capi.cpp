#include "weylwalks/weylwalks.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "weylwalks/errors.hpp"
#include "weylwalks/fl_asymptotics.hpp"
#include "weylwalks/model.hpp"
#include "weylwalks/report.hpp"
#include "weylwalks/walk_oracle.hpp"

struct ww_model {
  weylwalks::Model model;
  weylwalks::Weights weights;
};

struct ww_estimate {
  weylwalks::AsymptoticEstimate est;
  unsigned precision;
};

namespace {

thread_local std::string lastError;
thread_local unsigned explicitPrecision = 0;

unsigned defaultPrecision() {
  if (const char* env = std::getenv("WEYLWALKS_PRECISION")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= 65536) return static_cast<unsigned>(v);
  }
  return weylwalks::kDefaultPrecisionBits;
}

void applyPrecision() { weylwalks::setWorkingPrecision(explicitPrecision ? explicitPrecision : defaultPrecision()); }

char* copyString(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
ww_status guarded(F&& f) {
  try {
    applyPrecision();
    f();
    lastError.clear();
    return WW_OK;
  } catch (const weylwalks::ParseError& e) {
    lastError = e.what();
    return WW_ERR_PARSE;
  } catch (const weylwalks::ResourceError& e) {
    lastError = e.what();
    return WW_ERR_RESOURCE;
  } catch (const weylwalks::PipelineError& e) {
    lastError = e.what();
    return WW_ERR_PIPELINE;
  } catch (const weylwalks::InvalidArgument& e) {
    lastError = e.what();
    return WW_ERR_ARG;
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return WW_ERR_RESOURCE;
  } catch (const std::exception& e) {
    lastError = e.what();
    return WW_ERR_ARG;
  }
}

ww_status nullArgument() {
  lastError = "null argument";
  return WW_ERR_ARG;
}

weylwalks::OracleConfig oracleConfig(size_t maxN) {
  weylwalks::OracleConfig c;
  if (maxN) c.maxLength = maxN;
  return c;
}

}  // namespace

extern "C" {

const char* ww_last_error(void) { return lastError.c_str(); }

ww_status ww_set_precision(unsigned bits) {
  if (bits != 0 && (bits < 16 || bits > 65536)) {
    lastError = "precision must lie in [16, 65536] bits";
    return WW_ERR_ARG;
  }
  explicitPrecision = bits;
  return WW_OK;
}

void ww_string_free(char* s) { std::free(s); }

ww_status ww_model_new(const char* name, const char* a, const char* b, ww_model** out) {
  if (!name || !a || !b || !out) return nullArgument();
  return guarded([&] {
    weylwalks::Model m = weylwalks::Model::parse(name);
    weylwalks::Weights w = weylwalks::Weights::parse(a, b);
    *out = new ww_model{m, w};
  });
}

void ww_model_free(ww_model* model) { delete model; }

ww_status ww_model_regime(const ww_model* model, char** out) {
  if (!model || !out) return nullArgument();
  return guarded([&] {
    *out = copyString(weylwalks::regimeName(weylwalks::classify(model->weights, model->model)));
  });
}

ww_status ww_count_q(const ww_model* model, size_t n, size_t max_n, char** out) {
  if (!model || !out) return nullArgument();
  return guarded([&] {
    auto s = weylwalks::sampleQ(model->model, {model->weights}, {n}, oracleConfig(max_n));
    *out = copyString(weylwalks::toString(s.front().at(n)));
  });
}

ww_status ww_count_endpoints(const ww_model* model, size_t n, size_t max_n, char** csv) {
  if (!model || !csv) return nullArgument();
  return guarded([&] {
    weylwalks::CountTable t = weylwalks::countEndpoints(model->model, n, oracleConfig(max_n));
    std::ostringstream os;
    os << "i,j,count\n";
    for (const auto& [ij, c] : t.counts) os << ij.first << ',' << ij.second << ',' << c.get_str() << '\n';
    *csv = copyString(os.str());
  });
}

ww_status ww_asymptotics(const ww_model* model, ww_estimate** out) {
  if (!model || !out) return nullArgument();
  return guarded([&] {
    auto est = weylwalks::asymptotics(model->model, model->weights);
    *out = new ww_estimate{std::move(est), weylwalks::workingPrecision()};
  });
}

void ww_estimate_free(ww_estimate* est) { delete est; }

double ww_estimate_rho(const ww_estimate* est) { return est ? est->est.rhoFloat.toDouble() : 0.0; }
double ww_estimate_r(const ww_estimate* est) { return est ? est->est.r.get_d() : 0.0; }
double ww_estimate_gamma(const ww_estimate* est) { return est ? est->est.gamma.toDouble() : 0.0; }
int ww_estimate_conjectured(const ww_estimate* est) { return est && est->est.conjectured ? 1 : 0; }

ww_status ww_estimate_rho_exact(const ww_estimate* est, char** out) {
  if (!est || !out) return nullArgument();
  return guarded([&] { *out = copyString(est->est.rho.toString()); });
}

ww_status ww_estimate_regime(const ww_estimate* est, char** out) {
  if (!est || !out) return nullArgument();
  return guarded([&] { *out = copyString(weylwalks::regimeName(est->est.regime)); });
}

ww_status ww_estimate_json(const ww_estimate* est, char** out) {
  if (!est || !out) return nullArgument();
  return guarded([&] { *out = copyString(weylwalks::estimateJson(est->est)); });
}

ww_status ww_estimate_text(const ww_estimate* est, char** out) {
  if (!est || !out) return nullArgument();
  return guarded([&] { *out = copyString(weylwalks::estimateText(est->est)); });
}

ww_status ww_estimate_predict(const ww_estimate* est, size_t n, char** out) {
  if (!est || !out) return nullArgument();
  return guarded([&] {
    weylwalks::PrecisionScope scope(est->precision);
    *out = copyString(weylwalks::decimal(est->est.predict(n), 30));
  });
}

ww_status ww_validate(const ww_model* model, const size_t* lengths, size_t count, double bound, size_t max_n,
                      char** json, int* passed) {
  if (!model || !json || (count && !lengths)) return nullArgument();
  return guarded([&] {
    weylwalks::ValidationConfig cfg;
    if (count) cfg.lengths.assign(lengths, lengths + count);
    if (bound > 0) cfg.bound = bound;
    cfg.oracle = oracleConfig(max_n);
    weylwalks::ValidationReport rep = weylwalks::runValidation(model->model, model->weights, cfg);
    *json = copyString(rep.toJson());
    if (passed) *passed = rep.passed ? 1 : 0;
  });
}

ww_status ww_sweep(const char* model, size_t w, size_t h, const char* lo, const char* hi, char** csv) {
  if (!model || !lo || !hi || !csv) return nullArgument();
  return guarded([&] {
    weylwalks::Model m = weylwalks::Model::parse(model);
    auto rows = weylwalks::sweep(m, w, h, weylwalks::parseRational(lo), weylwalks::parseRational(hi));
    *csv = copyString(weylwalks::sweepCsv(rows));
  });
}

}  // extern "C"
