#include "achieve/lemma.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>

#include "achieve/errors.hpp"

namespace achieve {

namespace {

constexpr double kDegenerate = 1e-6;

bool valid_triple(const std::array<Vec2, 3>& c) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double d = distance(c[i], c[j]);
      if (!(d > kDegenerate) || !(d < 2.0 - kDegenerate)) return false;
    }
  }
  return true;
}

constexpr int third(int i, int j) { return 3 - i - j; }

}  // namespace

TripleCircleConfig triple_config_angles(Vec2 c1, Vec2 c2, Vec2 c3) {
  TripleCircleConfig cfg;
  cfg.centers = {c1, c2, c3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double d = distance(cfg.centers[i], cfg.centers[j]);
      if (!(d > 0.0) || !(d < 2.0)) {
        throw DomainError("triple_config_angles: circles must meet in two distinct points");
      }
      const Vec2 u = (cfg.centers[j] - cfg.centers[i]) * (1.0 / d);
      const Vec2 left{-u.y, u.x};
      const Vec2 mid = (cfg.centers[i] + cfg.centers[j]) * 0.5;
      const double h = std::sqrt(1.0 - d * d / 4.0);
      cfg.x[i][j] = cfg.x[j][i] = mid + left * h;
      cfg.y[i][j] = cfg.y[j][i] = mid - left * h;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      cfg.angles[i][j] = angle_at(cfg.centers[i], cfg.x[i][j], cfg.y[i][third(i, j)]);
    }
  }
  return cfg;
}

double TripleCircleConfig::chord_angle(int i, int j) const { return angle_at(centers[i], x[i][j], y[i][j]); }

double TripleCircleConfig::max_angle() const {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j != i) m = std::max(m, angles[i][j]);
    }
  }
  return m;
}

double TripleCircleConfig::min_max_angle_over_labelings() const {
  // Pair index: (0,1) -> 0, (0,2) -> 1, (1,2) -> 2.
  auto pair_index = [](int a, int b) { return a + b - 1; };
  double best = std::numbers::pi;
  for (int mask = 0; mask < 8; ++mask) {
    auto xs = [&](int a, int b) { return (mask >> pair_index(a, b) & 1) ? y[a][b] : x[a][b]; };
    auto ys = [&](int a, int b) { return (mask >> pair_index(a, b) & 1) ? x[a][b] : y[a][b]; };
    double m = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        m = std::max(m, angle_at(centers[i], xs(i, j), ys(i, third(i, j))));
      }
    }
    best = std::min(best, m);
  }
  return best;
}

namespace {

double objective(const std::array<Vec2, 3>& c) {
  if (!valid_triple(c)) return std::numeric_limits<double>::infinity();
  return triple_config_angles(c[0], c[1], c[2]).min_max_angle_over_labelings();
}

struct Candidate {
  double value;
  std::array<Vec2, 3> centers;
};

}  // namespace

LemmaReport lemma_search(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("lemma_search: samples must be at least 1");
  LemmaReport report;
  report.samples = samples;
  report.min_over_samples_of_max_angle = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);

  constexpr std::size_t kKeep = 64;
  std::vector<Candidate> best;
  while (report.valid_samples < samples) {
    // c1 at the origin; rigid motions do not change the angles. Draws that
    // are not pairwise-intersecting configurations are redrawn.
    std::array<Vec2, 3> c{Vec2{0.0, 0.0}, Vec2{coord(rng), coord(rng)}, Vec2{coord(rng), coord(rng)}};
    if (!valid_triple(c)) {
      ++report.skipped_degenerate;
      continue;
    }
    ++report.valid_samples;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double d = distance(c[i], c[j]);
        if (i != j && d >= 1.0) report.max_tangent_arc = std::max(report.max_tangent_arc, 2.0 * std::acos(1.0 / d));
      }
    }
    const double v = objective(c);
    if (best.size() < kKeep || v < best.back().value) {
      best.push_back({v, c});
      std::sort(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
      if (best.size() > kKeep) best.pop_back();
    }
  }

  // Pattern search with a shrinking step from each kept sample.
  std::normal_distribution<double> jitter(0.0, 1.0);
  for (Candidate& cand : best) {
    ++report.descents;
    double step = 0.05;
    while (step > 1e-13) {
      bool improved = false;
      for (int attempt = 0; attempt < 24; ++attempt) {
        auto trial = cand.centers;
        for (int i = 1; i < 3; ++i) {
          trial[i].x += step * jitter(rng);
          trial[i].y += step * jitter(rng);
        }
        const double v = objective(trial);
        if (v < cand.value) {
          cand = {v, trial};
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  for (const Candidate& cand : best) {
    if (cand.value < report.min_over_samples_of_max_angle) {
      report.min_over_samples_of_max_angle = cand.value;
      report.best_centers = cand.centers;
    }
  }
  if (report.min_over_samples_of_max_angle < std::numbers::pi / 3.0 - 1e-9) {
    report.counterexample = report.best_centers;
  }
  return report;
}

}  // namespace achieve
