// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "uowc/errors.hpp"
#include "uowc/math_util.hpp"
#include "uowc/rng.hpp"

namespace uowc {

ScatterSampler::ScatterSampler(const PhaseFunction& pf, int resolution) {
  if (resolution < kMinResolution) {
    throw ConfigError("scatter sampler resolution must be at least 2^14");
  }
  // The planar Fournier-Forand density diverges at both ends of the period,
  // so its table starts/ends at the clamp cut and uses log-spaced tails to
  // resolve the forward spike; the HG variants are finite on the full
  // period and a uniform table suffices.
  if (pf.is_fournier_forand()) {
    const double lo = kForwardClampRad;
    const double hi = kTwoPi - kForwardClampRad;
    const double tail_to = 0.3;
    const int n_tail = resolution / 4;
    const int n_mid = resolution - 2 * n_tail;
    angle_.reserve(resolution);
    const double ratio = std::log(tail_to / lo) / n_tail;
    for (int i = 0; i < n_tail; ++i) angle_.push_back(lo * std::exp(i * ratio));
    const double mid_lo = tail_to;
    const double mid_hi = kTwoPi - tail_to;
    for (int i = 0; i < n_mid; ++i) {
      angle_.push_back(mid_lo + (mid_hi - mid_lo) * i / (n_mid - 1));
    }
    for (int i = n_tail - 1; i >= 0; --i) angle_.push_back(kTwoPi - lo * std::exp(i * ratio));
    angle_.front() = lo;
    angle_.back() = hi;
  } else {
    angle_.resize(resolution);
    for (int i = 0; i < resolution; ++i) angle_[i] = kTwoPi * i / (resolution - 1);
  }

  const int n = static_cast<int>(angle_.size());
  cdf_.assign(n, 0.0);
  double prev = pf.density(angle_[0]);
  if (!std::isfinite(prev)) {
    throw NumericError("scatter sampler: non-finite density at support start");
  }
  double acc = 0.0;
  for (int i = 1; i < n; ++i) {
    const double cur = pf.density(angle_[i]);
    if (!std::isfinite(cur)) {
      throw NumericError("scatter sampler: non-finite density in CDF table");
    }
    acc += 0.5 * (prev + cur) * (angle_[i] - angle_[i - 1]);
    cdf_[i] = acc;
    prev = cur;
  }
  if (!(acc > 0.0)) throw NumericError("scatter sampler: density mass is zero");
  for (double& c : cdf_) c /= acc;
  cdf_.back() = 1.0;
}

double ScatterSampler::sample(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return angle_.front();
  if (it == cdf_.end()) return angle_.back();
  const std::size_t hi = static_cast<std::size_t>(it - cdf_.begin());
  const std::size_t lo = hi - 1;
  const double span = cdf_[hi] - cdf_[lo];
  const double t = span > 0.0 ? (u - cdf_[lo]) / span : 0.0;
  return angle_[lo] + t * (angle_[hi] - angle_[lo]);
}

double ScatterSampler::cdf(double phi) const {
  if (phi <= angle_.front()) return 0.0;
  if (phi >= angle_.back()) return 1.0;
  const auto it = std::upper_bound(angle_.begin(), angle_.end(), phi);
  const std::size_t hi = static_cast<std::size_t>(it - angle_.begin());
  const std::size_t lo = hi - 1;
  const double t = (phi - angle_[lo]) / (angle_[hi] - angle_[lo]);
  return cdf_[lo] + t * (cdf_[hi] - cdf_[lo]);
}

namespace {

constexpr double kRouletteThreshold = 1e-4;
constexpr double kRouletteSurvive = 0.5;
constexpr long kChunk = 1 << 14;

struct Tally {
  double captured = 0.0;
  double captured_sq = 0.0;
  double absorbed = 0.0;
  double escaped = 0.0;

  void operator+=(const Tally& o) {
    captured += o.captured;
    captured_sq += o.captured_sq;
    absorbed += o.absorbed;
    escaped += o.escaped;
  }
};

struct TraceSetup {
  double c, albedo;
  double distance, aperture, fov;
  double launch_half_angle;
  double back_limit, side_limit;
  int max_events;  // angle-sample budget, grows with the optical depth c*r
};

void trace_one(const TraceSetup& s, const ScatterSampler& sampler, SplitMix64& rng, Tally& tally) {
  double x = 0.0, y = 0.0;
  double theta = (2.0 * rng.next_double() - 1.0) * s.launch_half_angle;
  double weight = 1.0;

  for (int event = 0; event < s.max_events; ++event) {
    const double path = -std::log(1.0 - rng.next_double()) / s.c;
    const double dx = std::cos(theta);
    const double dy = std::sin(theta);
    const double nx = x + path * dx;
    const double ny = y + path * dy;

    if (dx > 0.0 && nx >= s.distance) {
      const double t = (s.distance - x) / (nx - x);
      const double y_cross = y + t * (ny - y);
      const double heading = std::abs(fold_signed(theta));
      if (std::abs(y_cross) <= s.aperture && heading <= s.fov) {
        tally.captured += weight;
        tally.captured_sq += weight * weight;
      } else {
        tally.escaped += weight;
      }
      return;
    }

    x = nx;
    y = ny;
    if (x < -s.back_limit || std::abs(y) > s.side_limit) {
      tally.escaped += weight;
      return;
    }

    tally.absorbed += weight * (1.0 - s.albedo);
    weight *= s.albedo;
    if (weight <= 0.0) return;
    if (weight < kRouletteThreshold) {
      if (rng.next_double() < kRouletteSurvive) {
        // The boosted weight is borrowed from the absorbed pool, so the
        // tallies stay conserved path by path (and unbiased in expectation).
        const double boosted = weight / kRouletteSurvive;
        tally.absorbed -= boosted - weight;
        weight = boosted;
      } else {
        tally.absorbed += weight;
        return;
      }
    }
    theta = fold_angle(theta + sampler.sample(rng.next_double()));
  }
  tally.escaped += weight;
}

}  // namespace

McResult trace_photons(long n_photons, const WaterOpticalProperties& water,
                       const ScatterSampler& sampler, const SourceSpec& source,
                       const ReceiverGeometry& receiver, double distance, std::uint64_t seed,
                       int threads) {
  if (n_photons < 10000) throw ConfigError("trace_photons: need at least 1e4 photons");
  if (!(distance > 0.0)) throw ConfigError("trace_photons: distance must be positive");
  if (!(water.attenuation > 0.0)) throw ConfigError("trace_photons: attenuation must be positive");

  TraceSetup s;
  s.c = water.attenuation;
  s.albedo = water.albedo();
  s.distance = distance;
  s.aperture = receiver.aperture_radius;
  s.fov = receiver.fov_half_angle;
  s.launch_half_angle = source.divergence;
  s.back_limit = 20.0 / s.c;
  s.side_limit = 10.0 * distance + 20.0 / s.c;
  s.max_events = 64 + 32 * static_cast<int>(std::ceil(s.c * distance));

  const long n_chunks = (n_photons + kChunk - 1) / kChunk;
  std::vector<Tally> chunk_tallies(static_cast<std::size_t>(n_chunks));

  int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp(n_threads, 1, 64);

  auto worker = [&](int tid) {
    for (long chunk = tid; chunk < n_chunks; chunk += n_threads) {
      Tally local;
      const long begin = chunk * kChunk;
      const long end = std::min(begin + kChunk, n_photons);
      for (long p = begin; p < end; ++p) {
        SplitMix64 rng(stream_state(seed, static_cast<std::uint64_t>(p)));
        trace_one(s, sampler, rng, local);
      }
      chunk_tallies[static_cast<std::size_t>(chunk)] = local;
    }
  };

  if (n_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  Tally total;
  for (const Tally& t : chunk_tallies) total += t;

  const double n = static_cast<double>(n_photons);
  McResult res;
  res.captured_fraction = total.captured / n;
  const double mean_sq = total.captured_sq / n;
  const double variance = std::max(0.0, mean_sq - res.captured_fraction * res.captured_fraction);
  res.std_error = std::sqrt(variance / n);
  res.absorbed_fraction = total.absorbed / n;
  res.escaped_fraction = total.escaped / n;
  res.n_photons = n_photons;
  res.seed = seed;
  return res;
}

}  // namespace uowc
