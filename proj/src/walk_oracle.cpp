#include "weylwalks/walk_oracle.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <set>

#include "weylwalks/errors.hpp"
#include "weylwalks/real.hpp"

namespace weylwalks {

namespace {

bool isTandem(const Model& m) { return m.kind() == ModelKind::Tandem; }

// Limbs needed to hold any count on layer n, with one spare limb.
std::size_t limbsFor(std::size_t n, std::size_t numSteps) {
  double bits = static_cast<double>(n) * std::log2(static_cast<double>(numSteps));
  return static_cast<std::size_t>(std::ceil(bits / 64.0)) + 1;
}

struct FreeDeleter {
  void operator()(mp_limb_t* p) const { std::free(p); }
};

// Triangle i + j <= N. With `mirror`, only cells with i <= j are stored and
// (i, j) with i > j reads (j, i).
class Storage {
 public:
  Storage(std::size_t N, std::size_t stride, bool mirror, std::size_t maxBytes)
      : N_(N), stride_(stride), mirror_(mirror) {
    rowOffset_.resize(N + 2);
    std::size_t off = 0;
    for (std::size_t i = 0; i <= N + 1; ++i) {
      rowOffset_[i] = off;
      if (i <= N && rowFirst(i) <= N - i) off += N - i + 1 - rowFirst(i);
    }
    double bytes = static_cast<double>(off) * stride * sizeof(mp_limb_t);
    if (bytes > static_cast<double>(maxBytes))
      throw ResourceError("walk oracle needs " + std::to_string(static_cast<long long>(bytes / (1 << 20))) +
                          " MiB of count storage, above the configured limit");
    data_.reset(static_cast<mp_limb_t*>(std::calloc(off * stride, sizeof(mp_limb_t))));
    if (!data_) throw ResourceError("allocation of walk count storage failed");
  }

  std::size_t rowFirst(std::size_t i) const { return mirror_ ? i : 0; }
  mp_limb_t* cell(std::size_t i, std::size_t j) {
    if (mirror_ && i > j) std::swap(i, j);
    return data_.get() + (rowOffset_[i] + j - rowFirst(i)) * stride_;
  }
  std::size_t N() const { return N_; }

 private:
  std::size_t N_, stride_;
  bool mirror_;
  std::vector<std::size_t> rowOffset_;
  std::unique_ptr<mp_limb_t, FreeDeleter> data_;
};

Integer limbsToInteger(const mp_limb_t* p, std::size_t limbs) {
  mp_size_t n = static_cast<mp_size_t>(limbs);
  while (n > 0 && p[n - 1] == 0) --n;
  Integer z;
  if (n == 0) return z;
  mpz_t view;
  mpz_roinit_n(view, p, n);
  mpz_set(z.get_mpz_t(), view);
  return z;
}

// sum_{k=lo}^{hi-1} c_k p^(k-lo) q^(hi-1-k) by binary splitting.
class PowerSplitter {
 public:
  PowerSplitter(const Integer& p, const Integer& q, std::size_t maxLen) : pp_(maxLen + 1), qq_(maxLen + 1) {
    pp_[0] = 1;
    qq_[0] = 1;
    for (std::size_t k = 1; k <= maxLen; ++k) {
      pp_[k] = pp_[k - 1] * p;
      qq_[k] = qq_[k - 1] * q;
    }
  }

  const Integer& pPow(std::size_t k) const { return pp_[k]; }
  const Integer& qPow(std::size_t k) const { return qq_[k]; }

  template <class Coeff>
  void sum(const Coeff& coeff, std::size_t lo, std::size_t hi, Integer& out) const {
    if (hi - lo <= 8) {
      out = 0;
      for (std::size_t k = lo; k < hi; ++k) {
        if (sgn(out) != 0 && qq_[1] != 1) out *= qq_[1];
        const Integer* c = coeff(k);
        if (c && sgn(*c) != 0) {
          if (k == lo) out += *c;
          else out += *c * pp_[k - lo];
        }
      }
      return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Integer left, right;
    sum(coeff, lo, mid, left);
    sum(coeff, mid, hi, right);
    if (qq_[1] != 1) left *= qq_[hi - mid];
    if (pp_[1] != 1) right *= pp_[mid - lo];
    out = left + right;
  }

 private:
  std::vector<Integer> pp_, qq_;
};

}  // namespace

bool LayerView::inSupport(int i, int j) const {
  if (i < 0 || j < 0 || static_cast<std::size_t>(i + j) > n_) return false;
  if (tandem_) return ((i - j - static_cast<long>(n_)) % 3 + 3) % 3 == 0;
  return true;
}

Integer LayerView::count(int i, int j) const {
  if (!inSupport(i, j)) return Integer(0);
  return limbsToInteger(cell(i, j), limbs_);
}

Integer CountTable::at(int i, int j) const {
  auto it = counts.find({i, j});
  return it == counts.end() ? Integer(0) : it->second;
}

Integer CountTable::total() const {
  Integer t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

bool transposeSymmetric(const Model& model) {
  const auto& steps = model.steps();
  for (const Step& s : steps)
    if (std::find(steps.begin(), steps.end(), Step{s.dy, s.dx}) == steps.end()) return false;
  return true;
}

void runCountDP(const Model& model, const std::vector<std::size_t>& lengths,
                const std::function<void(const LayerView&)>& visit, const OracleConfig& config) {
  if (lengths.empty()) return;
  std::set<std::size_t> wanted(lengths.begin(), lengths.end());
  std::size_t N = *wanted.rbegin();
  if (N > config.maxLength)
    throw ResourceError("walk length " + std::to_string(N) + " exceeds the configured maximum " +
                        std::to_string(config.maxLength));
  const bool tandem = isTandem(model);
  const bool mirror = transposeSymmetric(model);
  const auto& steps = model.steps();
  const std::size_t stride = limbsFor(N, steps.size());

  std::unique_ptr<Storage> store;
  std::vector<mp_limb_t> prevOld, curOld;
  try {
    store = std::make_unique<Storage>(N, stride, mirror, config.maxBytes);
    if (!tandem) {
      prevOld.assign((N + 2) * stride, 0);
      curOld.assign((N + 2) * stride, 0);
    }
  } catch (const std::bad_alloc&) {
    throw ResourceError("allocation of walk count storage failed");
  }
  Storage& S = *store;
  S.cell(0, 0)[0] = 1;

  std::size_t limbs = 1;
  auto emit = [&](std::size_t n) {
    LayerView view(n, limbs, [&S](int i, int j) { return static_cast<const mp_limb_t*>(S.cell(i, j)); }, tandem);
    visit(view);
  };
  if (wanted.count(0)) emit(0);

  for (std::size_t n = 1; n <= N; ++n) {
    const std::size_t L = limbsFor(n, steps.size());
    const long nn = static_cast<long>(n);
    if (tandem) {
      // Layers n and n-1 live on disjoint residue classes of i - j mod 3,
      // so the update can run in place without copies.
      for (long i = 0; i <= nn; ++i) {
        long j0 = ((i - nn) % 3 + 3) % 3;
        for (long j = j0; j <= nn - i; j += 3) {
          mp_limb_t* dst = S.cell(i, j);
          bool first = true;
          for (const Step& s : steps) {
            long si = i - s.dx, sj = j - s.dy;
            if (si < 0 || sj < 0 || si + sj > nn - 1) continue;
            const mp_limb_t* src = S.cell(si, sj);
            if (first) {
              mpn_copyi(dst, src, L);
              first = false;
            } else {
              mpn_add_n(dst, dst, src, L);
            }
          }
          if (first) mpn_zero(dst, L);
        }
      }
    } else {
      // Rows ascending; old rows i-1 and i are kept in buffers indexed by j.
      const long lastRow = mirror ? nn / 2 : nn;
      for (long i = 0; i <= lastRow; ++i) {
        const long first = mirror ? i : 0;
        for (long j = first; j <= nn - 1 - i; ++j) mpn_copyi(&curOld[j * stride], S.cell(i, j), L);
        for (long j = first; j <= nn - i; ++j) {
          mp_limb_t* dst = S.cell(i, j);
          bool firstSource = true;
          for (const Step& s : steps) {
            long si = i - s.dx, sj = j - s.dy;
            if (si < 0 || sj < 0 || si + sj > nn - 1) continue;
            if (mirror && si > sj) std::swap(si, sj);
            const mp_limb_t* src;
            if (si == i - 1) src = &prevOld[sj * stride];
            else if (si == i) src = &curOld[sj * stride];
            else src = S.cell(si, sj);
            if (firstSource) {
              mpn_copyi(dst, src, L);
              firstSource = false;
            } else {
              mpn_add_n(dst, dst, src, L);
            }
          }
          if (firstSource) mpn_zero(dst, L);
        }
        std::swap(prevOld, curOld);
      }
    }
    limbs = L;
    if (wanted.count(n)) emit(n);
  }
}

std::vector<Rational> weightedTotals(const LayerView& layer, const std::vector<Weights>& weights) {
  const std::size_t n = layer.length();
  std::vector<Rational> out;
  out.reserve(weights.size());
  // Materialize counts once per layer.
  std::vector<std::vector<Integer>> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    rows[i].resize(n - i + 1);
    for (std::size_t j = 0; j + i <= n; ++j)
      if (layer.inSupport(static_cast<int>(i), static_cast<int>(j)))
        rows[i][j] = limbsToInteger(layer.cell(static_cast<int>(i), static_cast<int>(j)), layer.limbs());
  }
  for (const Weights& w : weights) {
    const Integer p1 = w.a().get_num(), q1 = w.a().get_den();
    const Integer p2 = w.b().get_num(), q2 = w.b().get_den();
    PowerSplitter sx(p1, q1, n + 1), sy(p2, q2, n + 1);
    // R_i = sum_j c_ij p2^j q2^(n-j);  total = sum_i R_i p1^i q1^(n-i)
    std::vector<Integer> R(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const auto& row = rows[i];
      sy.sum([&row](std::size_t j) { return &row[j]; }, 0, row.size(), R[i]);
      if (i > 0 && q2 != 1) R[i] *= sy.qPow(i);
    }
    Integer T;
    sx.sum([&R](std::size_t i) { return &R[i]; }, 0, n + 1, T);
    Rational q(T, sx.qPow(n) * sy.qPow(n));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

CountTable countEndpoints(const Model& model, std::size_t n, const OracleConfig& config) {
  CountTable table;
  table.n = n;
  runCountDP(
      model, {n},
      [&](const LayerView& v) {
        for (int i = 0; i <= static_cast<int>(n); ++i)
          for (int j = 0; i + j <= static_cast<int>(n); ++j) {
            if (!v.inSupport(i, j)) continue;
            Integer c = v.count(i, j);
            if (sgn(c) != 0) table.counts[{i, j}] = c;
          }
      },
      config);
  return table;
}

QSeries qSeries(const Model& model, const Weights& weights, std::size_t N, const OracleConfig& config) {
  QSeries qs{model, weights, std::vector<Rational>(N + 1)};
  std::vector<std::size_t> all(N + 1);
  for (std::size_t k = 0; k <= N; ++k) all[k] = k;
  runCountDP(
      model, all, [&](const LayerView& v) { qs.values[v.length()] = weightedTotals(v, {weights})[0]; }, config);
  return qs;
}

std::vector<QSamples> sampleQ(const Model& model, const std::vector<Weights>& weights,
                              const std::vector<std::size_t>& lengths, const OracleConfig& config) {
  std::vector<QSamples> out(weights.size());
  runCountDP(
      model, lengths,
      [&](const LayerView& v) {
        auto totals = weightedTotals(v, weights);
        for (std::size_t k = 0; k < weights.size(); ++k) out[k][v.length()] = totals[k];
      },
      config);
  return out;
}

std::vector<std::size_t> fitLengths(std::size_t N, std::size_t period) {
  if (period == 0) throw InvalidArgument("period must be positive");
  std::size_t m = (N / 2) / period * period;
  std::set<std::size_t> s{N, N - std::min(N, period), m, 2 * m};
  return {s.begin(), s.end()};
}

GrowthFit fitGrowth(const QSamples& q, const QuadraticNumber& rho, std::size_t period, std::size_t n0) {
  if (q.empty()) throw InvalidArgument("no samples to fit");
  if (period == 0) throw InvalidArgument("period must be positive");
  GrowthFit fit;
  fit.period = period;
  fit.N = q.rbegin()->first;
  if (fit.N < 2 * n0)
    throw InvalidArgument("growth fit needs lengths up to at least " + std::to_string(2 * n0));
  fit.m = (fit.N / 2) / period * period;
  auto get = [&](std::size_t n) -> const Rational& {
    auto it = q.find(n);
    if (it == q.end()) throw InvalidArgument("growth fit needs q(" + std::to_string(n) + ")");
    if (sgn(it->second) <= 0) throw DegenerateError("q(" + std::to_string(n) + ") is not positive");
    return it->second;
  };
  PrecisionScope scope(std::max(workingPrecision(), 128u));
  Real ratio = Real(get(fit.N)) / Real(get(fit.N - period));
  fit.rhoHat = exp(log(ratio) / Real(static_cast<long>(period))).toDouble();
  Real lr = log(Real(get(2 * fit.m))) - log(Real(get(fit.m))) - Real(static_cast<long>(fit.m)) * log(rho.toReal());
  fit.rHat = -(lr / log(Real(2L))).toDouble();
  return fit;
}

GrowthFit fitGrowth(const QSeries& qs, const QuadraticNumber& rho, std::size_t period, std::size_t n0) {
  QSamples q;
  for (std::size_t k = 0; k < qs.values.size(); ++k) q[k] = qs.values[k];
  return fitGrowth(q, rho, period, n0);
}

}  // namespace weylwalks
