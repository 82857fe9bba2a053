#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "lcb/curves/curves.hpp"
#include "lcb/error.hpp"

namespace lcb::curves {

namespace {

using Series = std::vector<double>;

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Determinant of a k x k matrix of truncated series, by subset DP over columns.
Series series_det(const std::vector<std::vector<Series>>& m, std::size_t len) {
  const std::size_t k = m.size();
  std::vector<Series> dp(std::size_t{1} << k, Series(len, 0.0));
  dp[0][0] = 1.0;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row >= k) continue;
    int parity = 0;
    for (std::size_t c = k; c-- > 0;) {
      if (mask & (std::size_t{1} << c)) {
        ++parity;
        continue;
      }
      Series term = series_mul(dp[mask], m[row][c]);
      double s = (parity % 2) ? -1.0 : 1.0;
      auto& dst = dp[mask | (std::size_t{1} << c)];
      for (std::size_t i = 0; i < len; ++i) dst[i] += s * term[i];
    }
  }
  return dp.back();
}

// Taylor coefficients of m_j(t + s) in s, up to degree deg.
Series minor_series(const CurveEvaluator& ev, double t, int j, int deg) {
  auto tay = ev.taylor(t, deg);
  const std::size_t size = tay[0].rows(), len = static_cast<std::size_t>(deg) + 1;
  const std::size_t jj = static_cast<std::size_t>(j);
  std::vector<std::vector<Series>> block(jj, std::vector<Series>(jj, Series(len, 0.0)));
  for (std::size_t r = 0; r < jj; ++r)
    for (std::size_t c = 0; c < jj; ++c)
      for (std::size_t d = 0; d < len; ++d) block[r][c][d] = tay[d](size - jj + r, c);
  return series_det(block, len);
}

double min_abs_minor(const CurveEvaluator& ev, double t) {
  double best = std::numeric_limits<double>::infinity();
  for (double m : m_functions(ev.at(t))) best = std::min(best, std::abs(m));
  return best;
}

double golden_min(const CurveEvaluator& ev, double a, double b) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = min_abs_minor(ev, c), fd = min_abs_minor(ev, d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = min_abs_minor(ev, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = min_abs_minor(ev, d);
    }
  }
  return 0.5 * (a + b);
}

// Vanishing orders of the m_j at tc from log-log slopes on both sides.
std::optional<MultVector> local_mult(const CurveEvaluator& ev, double tc, double h) {
  std::vector<std::pair<double, std::vector<double>>> samples;
  for (int k = 0; k <= 4; ++k) {
    double d = h * std::pow(10.0, k / 4.0);
    for (double t : {tc - d, tc + d})
      if (t >= ev.t_min() && t <= ev.t_max()) samples.emplace_back(t, m_functions(ev.at(t)));
  }
  try {
    return mult_vector_numeric(tc, samples).mult;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

double newton_polish(const CurveEvaluator& ev, double tc, int j, int mu, double h) {
  double t = tc;
  for (int it = 0; it < 30; ++it) {
    Series c = minor_series(ev, t, j, mu + 1);
    if (c[static_cast<std::size_t>(mu)] == 0) break;
    double s = -c[static_cast<std::size_t>(mu) - 1] / (mu * c[static_cast<std::size_t>(mu)]);
    if (!std::isfinite(s) || std::abs(t + s - tc) > 2 * h) return tc;
    double next = std::clamp(t + s, ev.t_min(), ev.t_max());
    if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
    t = next;
  }
  return t;
}

std::string interval_text(double a, double b) {
  return "[" + linalg::to_string(a) + ", " + linalg::to_string(b) + "]";
}

}  // namespace

std::vector<ItineraryEvent> itinerary(const ConvexCurveSpec& spec, double t0, double t1, const ItineraryOptions& opts) {
  if (!(t1 > t0)) throw DomainError("itinerary needs t0 < t1");
  CurveEvaluator ev(spec);
  if (t0 < ev.t_min() || t1 > ev.t_max()) throw DomainError("itinerary window leaves the curve domain");
  const double step = opts.step > 0 ? opts.step : (t1 - t0) / 4096;
  const auto count = static_cast<std::size_t>(std::ceil((t1 - t0) / step));
  const double h = (t1 - t0) / static_cast<double>(count);
  const int n = spec.n;
  const Permutation eta = Permutation::longest(n);

  std::vector<double> ts(count + 1);
  std::vector<std::vector<double>> ms(count + 1);
  for (std::size_t i = 0; i <= count; ++i) {
    ts[i] = i == count ? t1 : t0 + h * static_cast<double>(i);
    ms[i] = m_functions(ev.at(ts[i]));
  }
  auto min_abs = [&](std::size_t i) {
    double best = std::numeric_limits<double>::infinity();
    for (double v : ms[i]) best = std::min(best, std::abs(v));
    return best;
  };
  std::vector<std::size_t> flagged;
  for (std::size_t i = 0; i <= count; ++i) {
    bool hit = min_abs(i) < opts.detect;
    if (!hit && i > 0)
      for (std::size_t j = 0; j < ms[i].size(); ++j)
        if ((ms[i][j] > 0) != (ms[i - 1][j] > 0)) hit = true;
    // Even-order zeros keep their sign and can sit above the threshold at
    // every grid point; any local minimum of some |m_j| is a candidate.
    for (std::size_t j = 0; !hit && j < ms[i].size(); ++j) {
      double here = std::abs(ms[i][j]);
      hit = (i == 0 || here < std::abs(ms[i - 1][j])) && (i == count || here <= std::abs(ms[i + 1][j]));
    }
    if (hit) flagged.push_back(i);
  }

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i : flagged) {
    if (clusters.empty() || i - clusters.back().back() > 10) clusters.emplace_back();
    clusters.back().push_back(i);
  }

  std::vector<ItineraryEvent> events;
  for (const auto& cl : clusters) {
    std::size_t best = cl.front();
    for (std::size_t i : cl)
      if (min_abs(i) < min_abs(best)) best = i;
    double lo = std::max(ev.t_min(), ts[best] - h), hi = std::min(ev.t_max(), ts[best] + h);
    double tc = golden_min(ev, lo, hi);

    auto mu = local_mult(ev, tc, h);
    if (mu) {
      int jstar = 0, mstar = 0;
      for (std::size_t j = 0; j < mu->size(); ++j)
        if ((*mu)[j] > 0 && (jstar == 0 || (*mu)[j] < mstar)) {
          jstar = static_cast<int>(j) + 1;
          mstar = (*mu)[j];
        }
      if (jstar > 0) tc = newton_polish(ev, tc, jstar, mstar, h);
    }
    if (tc < t0 || tc > t1 || min_abs_minor(ev, tc) >= opts.detect) continue;

    spin::SignedPermMatrix cell;
    try {
      cell = bruhat::cell_of(ev.at(tc), opts.classify_tol);
    } catch (const DegeneracyError& e) {
      throw DegeneracyError("unresolved itinerary event in " + interval_text(lo, hi) + ": " + e.what());
    }
    Permutation sigma = compose(eta, cell.sigma);
    if (sigma == Permutation::identity(n)) continue;
    if (mu && *mu != coxeter::mult_vector(sigma))
      throw DegeneracyError("itinerary event in " + interval_text(lo, hi) + " has cell " + to_string(sigma) +
                            " but local vanishing orders disagree");
    if (!events.empty() && std::abs(tc - events.back().t) <= 10 * step) continue;
    events.push_back({tc, sigma, cell});
  }
  return events;
}

}  // namespace lcb::curves
