#include "weylwalks/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "weylwalks/errors.hpp"

namespace weylwalks {

using nlohmann::ordered_json;

std::string decimal(const Real& x, int digits) {
  if (!x.isFinite()) return x.toString();
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x.raw());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string decimal(const Rational& q, int digits) {
  PrecisionScope scope(static_cast<unsigned>(digits * 3.33) + 32);
  return decimal(Real(q), digits);
}

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string rString(const Rational& r) { return decimal(r, 20); }

Real parseReal(const std::string& s) {
  try {
    return Real::fromString(s);
  } catch (const std::exception&) {
    throw ParseError("not a decimal number: '" + s + "'");
  }
}

}  // namespace

std::string ValidationReport::toJson(int indent) const {
  ordered_json j;
  j["model"] = model;
  j["a"] = a;
  j["b"] = b;
  j["regime"] = regime;
  j["conjectured"] = conjectured;
  j["gamma"] = gamma;
  j["rho_exact"] = rhoExact;
  j["rho_float"] = rhoFloat;
  j["r"] = r;
  j["periodic"] = ordered_json::array();
  for (const auto& p : periodic)
    j["periodic"].push_back({{"c_re", p.cRe}, {"c_im", p.cIm}, {"u_re", p.uRe}, {"u_im", p.uIm}});
  j["samples"] = ordered_json::array();
  for (const auto& s : samples)
    j["samples"].push_back(
        {{"n", s.n}, {"q", s.q}, {"predicted", s.predicted}, {"relative_error", s.relativeError}});
  if (fit)
    j["fit"] = {{"rho_hat", fit->rhoHat}, {"r_hat", fit->rHat}, {"N", fit->N}, {"m", fit->m}, {"period", fit->period}};
  else
    j["fit"] = nullptr;
  j["bound"] = bound;
  j["monotone"] = monotone;
  j["passed"] = passed;
  j["timings"] = {{"oracle_seconds", oracleSeconds}, {"pipeline_seconds", pipelineSeconds}};
  return j.dump(indent);
}

ValidationReport ValidationReport::fromJson(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    ValidationReport r;
    r.model = j.at("model").get<std::string>();
    r.a = j.at("a").get<std::string>();
    r.b = j.at("b").get<std::string>();
    r.regime = j.at("regime").get<std::string>();
    r.conjectured = j.at("conjectured").get<bool>();
    r.gamma = j.at("gamma").get<std::string>();
    r.rhoExact = j.at("rho_exact").get<std::string>();
    r.rhoFloat = j.at("rho_float").get<std::string>();
    r.r = j.at("r").get<std::string>();
    for (const auto& p : j.at("periodic"))
      r.periodic.push_back({p.at("c_re").get<std::string>(), p.at("c_im").get<std::string>(),
                            p.at("u_re").get<std::string>(), p.at("u_im").get<std::string>()});
    for (const auto& s : j.at("samples"))
      r.samples.push_back({s.at("n").get<std::size_t>(), s.at("q").get<std::string>(),
                           s.at("predicted").get<std::string>(), s.at("relative_error").get<std::string>()});
    if (!j.at("fit").is_null()) {
      const auto& f = j.at("fit");
      r.fit = FitRecord{f.at("rho_hat").get<std::string>(), f.at("r_hat").get<std::string>(),
                        f.at("N").get<std::size_t>(), f.at("m").get<std::size_t>(), f.at("period").get<std::size_t>()};
    }
    r.bound = j.at("bound").get<std::string>();
    r.monotone = j.at("monotone").get<bool>();
    r.passed = j.at("passed").get<bool>();
    r.oracleSeconds = j.at("timings").at("oracle_seconds").get<std::string>();
    r.pipelineSeconds = j.at("timings").at("pipeline_seconds").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed validation report: ") + e.what());
  }
}

Real recomputePrediction(const ValidationReport& report, std::size_t n) {
  Real rho = parseReal(report.rhoFloat);
  Real r = parseReal(report.r);
  Complex osc(parseReal(report.gamma));
  for (const auto& p : report.periodic) {
    Complex c(parseReal(p.cRe), parseReal(p.cIm)), u(parseReal(p.uRe), parseReal(p.uIm));
    osc += c * pow(u, static_cast<long>(n));
  }
  Real v = pow(rho, static_cast<long>(n)) * osc.re;
  if (n > 0) v = v * pow(Real(static_cast<long>(n)), -r);
  return v;
}

ValidationReport runValidation(const Model& model, const Weights& weights, const ValidationConfig& config) {
  if (config.lengths.empty()) throw InvalidArgument("no lengths to validate");
  std::vector<std::size_t> lengths = config.lengths;
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  ValidationReport rep;
  auto t0 = std::chrono::steady_clock::now();
  AsymptoticEstimate est = asymptotics(model, weights, config.options);
  rep.pipelineSeconds = fixed(seconds(t0));

  rep.model = model.name();
  rep.a = toString(weights.a());
  rep.b = toString(weights.b());
  rep.regime = regimeName(est.regime);
  rep.conjectured = est.conjectured;
  rep.gamma = decimal(est.gamma, 36);
  rep.rhoExact = est.rho.toString();
  rep.rhoFloat = decimal(est.rhoFloat, 36);
  rep.r = rString(est.r);
  for (const auto& p : est.periodic)
    rep.periodic.push_back({decimal(p.c.re, 36), decimal(p.c.im, 36), decimal(p.u.re, 36), decimal(p.u.im, 36)});
  rep.bound = decimal(Real(config.bound), 6);

  std::size_t period = model.kind() == ModelKind::Tandem && est.regime == Regime::Reluctant ? 3 : 1;
  std::size_t N = lengths.back();
  std::set<std::size_t> all(lengths.begin(), lengths.end());
  bool doFit = N >= 1024;
  if (doFit)
    for (auto n : fitLengths(N, period)) all.insert(n);

  auto t1 = std::chrono::steady_clock::now();
  QSamples q = sampleQ(model, {weights}, {all.begin(), all.end()}, config.oracle).front();
  rep.oracleSeconds = fixed(seconds(t1));

  std::vector<Real> errors;
  for (auto n : lengths) {
    const Rational& exact = q.at(n);
    Real pred = recomputePrediction(rep, n);
    Real qr(exact);
    Real err = qr.isZero() ? Real(0L) : abs(qr - pred) / qr;
    errors.push_back(err);
    rep.samples.push_back({n, toString(exact), decimal(pred, 30), decimal(err, 20)});
  }
  rep.monotone = true;
  for (std::size_t k = 1; k < errors.size(); ++k)
    if (!(errors[k] < errors[k - 1])) rep.monotone = false;
  rep.passed = rep.monotone && errors.back() < Real(config.bound);

  if (doFit) {
    GrowthFit f = fitGrowth(q, est.rho, period);
    char buf[2][64];
    std::snprintf(buf[0], sizeof buf[0], "%.12g", f.rhoHat);
    std::snprintf(buf[1], sizeof buf[1], "%.12g", f.rHat);
    rep.fit = FitRecord{buf[0], buf[1], f.N, f.m, f.period};
  }
  return rep;
}

std::string estimateJson(const AsymptoticEstimate& est, int indent) {
  ordered_json j;
  j["model"] = est.model.name();
  j["a"] = toString(est.weights.a());
  j["b"] = toString(est.weights.b());
  j["regime"] = regimeName(est.regime);
  j["rho_exact"] = est.rho.toString();
  j["rho_float"] = decimal(est.rhoFloat, 30);
  j["r"] = rString(est.r);
  j["gamma_float"] = decimal(est.gamma, 30);
  j["conjectured"] = est.conjectured;
  return j.dump(indent);
}

std::string estimateText(const AsymptoticEstimate& est) {
  std::ostringstream os;
  os << "model        " << est.model.name() << "\n"
     << "weights      a=" << toString(est.weights.a()) << " b=" << toString(est.weights.b()) << "\n"
     << "regime       " << regimeName(est.regime) << "\n"
     << "rho          " << est.rho.toString() << " = " << decimal(est.rhoFloat, 20) << "\n"
     << "r            " << toString(est.r) << "\n"
     << "gamma        " << decimal(est.gamma, 20) << "\n"
     << "conjectured  " << (est.conjectured ? "yes" : "no") << "\n";
  if (!est.periodic.empty()) os << "periodic     " << est.periodic.size() << " companion terms\n";
  os << "q(n) ~ gamma rho^n n^-r\n";
  return os.str();
}

std::vector<SweepRow> sweep(const Model& model, std::size_t W, std::size_t H, const Rational& lo, const Rational& hi,
                            const AsymptoticOptions& options) {
  if (W == 0 || H == 0) throw InvalidArgument("grid dimensions must be positive");
  if (!(lo < hi)) throw InvalidArgument("empty sweep range");
  Rational span = hi - lo;
  std::map<Regime, std::optional<Rational>> rOf;
  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i <= W; ++i) {
    Rational a = lo + span * Rational(static_cast<long>(i), static_cast<long>(W));
    a.canonicalize();
    for (std::size_t k = 1; k <= H; ++k) {
      Rational b = lo + span * Rational(static_cast<long>(k), static_cast<long>(H));
      b.canonicalize();
      if (a <= 0 || b <= 0) continue;
      Weights w(a, b);
      SweepRow row{a, b, classify(w, model), {}, {}};
      row.rho = exponentialGrowth(row.regime, w, model);
      auto it = rOf.find(row.regime);
      if (it == rOf.end()) {
        std::optional<Rational> r;
        try {
          r = asymptotics(model, w, options).r;
        } catch (const PipelineError&) {
        }
        it = rOf.emplace(row.regime, r).first;
      }
      row.r = it->second;
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return rows;
}

std::string sweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "a,b,regime,rho,rho_exact,r\n";
  for (const auto& row : rows)
    os << toString(row.a) << ',' << toString(row.b) << ',' << regimeName(row.regime) << ','
       << decimal(row.rho.toReal(), 17) << ',' << row.rho.toString() << ',' << (row.r ? rString(*row.r) : "NA")
       << '\n';
  return os.str();
}

}  // namespace weylwalks
