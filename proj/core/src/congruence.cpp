#include "achieve/congruence.hpp"

#include <algorithm>
#include <map>
#include <numbers>

#include "achieve/errors.hpp"

namespace achieve {

PointIndex::PointIndex(std::span<const Vec2> points, double cell)
    : points_(points.begin(), points.end()), cell_(cell) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    buckets_[key(cell_of(points_[i].x), cell_of(points_[i].y))].push_back(i);
  }
}

std::vector<std::size_t> PointIndex::within(Vec2 q, double r) const {
  std::vector<std::size_t> out;
  const std::int64_t x0 = cell_of(q.x - r);
  const std::int64_t x1 = cell_of(q.x + r);
  const std::int64_t y0 = cell_of(q.y - r);
  const std::int64_t y1 = cell_of(q.y + r);
  for (std::int64_t cx = x0; cx <= x1; ++cx) {
    for (std::int64_t cy = y0; cy <= y1; ++cy) {
      auto it = buckets_.find(key(cx, cy));
      if (it == buckets_.end()) continue;
      for (std::size_t i : it->second) {
        if (distance(points_[i], q) <= r) out.push_back(i);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::size_t> PointIndex::nearest_within(Vec2 q, double tol) const {
  std::optional<std::size_t> best;
  double best_d = tol;
  for (std::size_t i : within(q, tol)) {
    const double d = distance(points_[i], q);
    if (d <= best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

int CopyOfG::present() const {
  return static_cast<int>(std::count_if(member.begin(), member.end(), [](int m) { return m >= 0; }));
}

namespace {

using LabelPair = std::pair<std::size_t, std::size_t>;

// Label pairs such that every subset of `min_present` labels contains one.
std::vector<LabelPair> label_cover(int min_present) {
  switch (min_present) {
    case 5: return {{0, 1}};
    case 4: return {{0, 1}, {2, 3}};
    // Complement of K_{2,3} on parts {g1,g4} and {g2,g3,g5}.
    case 3: return {{0, 3}, {1, 2}, {1, 4}, {2, 4}};
    case 2: {
      std::vector<LabelPair> all;
      for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) all.emplace_back(a, b);
      }
      return all;
    }
    default: throw DomainError("enumerate_copies: min_present must be in 2..5");
  }
}

double wrap_pi(double a) {
  a = std::fmod(a + std::numbers::pi, 2.0 * std::numbers::pi);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a - std::numbers::pi;
}

struct Fit {
  Vec2 center;
  double base = 0.0;
  double residual = 0.0;
};

// Least-squares rotation + translation of the oriented template onto the
// present labelled points.
Fit fit_copy(const GoalSet& goal, int orientation, const std::array<int, 5>& member, std::span<const Vec2> pts) {
  Vec2 tbar;
  Vec2 pbar;
  int n = 0;
  std::array<Vec2, 5> tmpl{};
  for (std::size_t k = 0; k < 5; ++k) {
    tmpl[k] = goal.point(k, {0.0, 0.0}, 0.0, orientation);
    if (member[k] < 0) continue;
    tbar = tbar + tmpl[k];
    pbar = pbar + pts[static_cast<std::size_t>(member[k])];
    ++n;
  }
  tbar = tbar * (1.0 / n);
  pbar = pbar * (1.0 / n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < 5; ++k) {
    if (member[k] < 0) continue;
    const Vec2 a = tmpl[k] - tbar;
    const Vec2 b = pts[static_cast<std::size_t>(member[k])] - pbar;
    sxx += a.dot(b);
    sxy += a.cross(b);
  }
  Fit fit;
  fit.base = std::atan2(sxy, sxx);
  const double c = std::cos(fit.base);
  const double s = std::sin(fit.base);
  const Vec2 rt{tbar.x * c - tbar.y * s, tbar.x * s + tbar.y * c};
  fit.center = pbar - rt;
  for (std::size_t k = 0; k < 5; ++k) {
    if (member[k] < 0) continue;
    const Vec2 model = goal.point(k, fit.center, fit.base, orientation);
    fit.residual = std::max(fit.residual, distance(model, pts[static_cast<std::size_t>(member[k])]));
  }
  return fit;
}

bool same_absent_points(const CopyOfG& a, const CopyOfG& b, double tol) {
  std::vector<Vec2> pa;
  std::vector<Vec2> pb;
  for (std::size_t k = 0; k < 5; ++k) {
    if (a.member[k] < 0) pa.push_back(a.points[k]);
    if (b.member[k] < 0) pb.push_back(b.points[k]);
  }
  if (pa.size() != pb.size()) return false;
  return std::all_of(pa.begin(), pa.end(), [&](Vec2 p) {
    return std::any_of(pb.begin(), pb.end(), [&](Vec2 q) { return distance(p, q) <= tol; });
  });
}

}  // namespace

std::vector<CopyOfG> enumerate_copies(std::span<const Vec2> pts, const GoalSet& goal, double eps,
                                      int min_present) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  const auto cover = label_cover(min_present);
  const double loose = 1000.0 * eps;
  const PointIndex index(pts);
  const double hs = goal.half_step();

  std::vector<CopyOfG> found;
  std::map<std::vector<int>, std::vector<std::size_t>> by_members;

  double max_chord = 0.0;
  for (auto [a, b] : cover) max_chord = std::max(max_chord, goal.chord(a, b));

  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j : index.within(pts[i], max_chord + loose)) {
      if (j == i) continue;
      const double d = distance(pts[i], pts[j]);
      for (auto [a, b] : cover) {
        // Ordered point pair (i, j) plays labels (a, b); the swap is visited as (j, i).
        if (std::abs(d - goal.chord(a, b)) > loose) continue;
        for (int orientation : {1, -1}) {
          const double expected = orientation * (GoalSet::kHalfSteps[b] - GoalSet::kHalfSteps[a]) * hs;
          for (const Circle& circle :
               unit_circles_through(PlanarPoint::free(pts[i]), PlanarPoint::free(pts[j]), loose)) {
            const Vec2 u = pts[i] - circle.center;
            const Vec2 v = pts[j] - circle.center;
            const double ai = std::atan2(u.y, u.x);
            const double delta = wrap_pi(std::atan2(v.y, v.x) - ai);
            if (std::abs(delta - expected) > 1e-3) continue;
            const double base = ai - orientation * GoalSet::kHalfSteps[a] * hs;
            std::array<int, 5> member{-1, -1, -1, -1, -1};
            member[a] = static_cast<int>(i);
            member[b] = static_cast<int>(j);
            int count = 2;
            for (std::size_t k = 0; k < 5; ++k) {
              if (k == a || k == b) continue;
              if (auto hit = index.nearest_within(goal.point(k, circle.center, base, orientation), loose)) {
                member[k] = static_cast<int>(*hit);
                ++count;
              }
            }
            if (count < min_present) continue;
            const Fit fit = fit_copy(goal, orientation, member, pts);
            if (fit.residual > eps) continue;

            CopyOfG copy;
            copy.center = fit.center;
            copy.base = fit.base;
            copy.orientation = orientation;
            copy.member = member;
            copy.residual = fit.residual;
            for (std::size_t k = 0; k < 5; ++k) copy.points[k] = goal.point(k, fit.center, fit.base, orientation);

            std::vector<int> key;
            for (int m : member) {
              if (m >= 0) key.push_back(m);
            }
            std::sort(key.begin(), key.end());
            auto& bucket = by_members[key];
            const bool dup = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t idx) {
              return same_absent_points(found[idx], copy, std::max(1e-7, 10.0 * eps));
            });
            if (dup) continue;
            bucket.push_back(found.size());
            found.push_back(copy);
          }
        }
      }
    }
  }
  return found;
}

std::vector<Vec2> positions(std::span<const PlanarPoint> points) {
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.xy());
  return out;
}

bool occupied(std::span<const PlanarPoint> points, Vec2 q, double tol) {
  return std::any_of(points.begin(), points.end(), [&](const PlanarPoint& p) { return distance(p.xy(), q) <= tol; });
}

std::vector<CopyOfG> find_copies(std::span<const PlanarPoint> points, const GoalSet& goal, double eps) {
  const auto pts = positions(points);
  auto copies = enumerate_copies(pts, goal, eps, 5);
  for (auto& c : copies) c.tags.fill(PointOwner::One);
  return copies;
}

namespace {

// Copies with exactly `want` points in p and every absent point free of both sides.
std::vector<CopyOfG> open_copies(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                                 const GoalSet& goal, double eps, int want, PointOwner tag) {
  const auto p = positions(p_points);
  const auto o = positions(o_points);
  const PointIndex p_index(p);
  const PointIndex o_index(o);
  std::vector<CopyOfG> out;
  for (auto& c : enumerate_copies(p, goal, eps, want)) {
    if (c.present() != want) continue;
    bool open = true;
    for (std::size_t k = 0; k < 5 && open; ++k) {
      if (c.member[k] >= 0) {
        c.tags[k] = tag;
        continue;
      }
      if (p_index.nearest_within(c.points[k], eps) || o_index.nearest_within(c.points[k], eps)) open = false;
      c.tags[k] = PointOwner::None;
    }
    if (open) out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<Threat> find_threats(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                                 const GoalSet& goal, double eps, Player owner) {
  const PointOwner tag = owner == Player::One ? PointOwner::One : PointOwner::Two;
  std::vector<Threat> out;
  for (auto& c : open_copies(p_points, o_points, goal, eps, 4, tag)) {
    Threat t;
    t.owner = owner;
    for (std::size_t k = 0; k < 5; ++k) {
      if (c.member[k] < 0) t.missing = k;
    }
    t.copy = c;
    out.push_back(t);
  }
  return out;
}

std::vector<CopyOfG> open_triples(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                                  const GoalSet& goal, double eps) {
  return open_copies(p_points, o_points, goal, eps, 3, PointOwner::One);
}

std::vector<Vec2> fork_points(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                              const GoalSet& goal, double eps) {
  struct Candidate {
    Vec2 at;
    std::vector<Vec2> completions;
  };
  std::vector<Candidate> candidates;
  const double tol = std::max(1e-7, 10.0 * eps);
  auto add = [&](Vec2 at, Vec2 completion) {
    for (auto& c : candidates) {
      if (distance(c.at, at) > tol) continue;
      const bool known = std::any_of(c.completions.begin(), c.completions.end(),
                                     [&](Vec2 q) { return distance(q, completion) <= tol; });
      if (!known) c.completions.push_back(completion);
      return;
    }
    candidates.push_back({at, {completion}});
  };
  for (const auto& copy : open_triples(p_points, o_points, goal, eps)) {
    std::vector<Vec2> absent;
    for (std::size_t k = 0; k < 5; ++k) {
      if (copy.member[k] < 0) absent.push_back(copy.points[k]);
    }
    add(absent[0], absent[1]);
    add(absent[1], absent[0]);
  }
  std::vector<Vec2> out;
  for (const auto& c : candidates) {
    if (c.completions.size() >= 2) out.push_back(c.at);
  }
  std::sort(out.begin(), out.end(), [](Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  return out;
}

}  // namespace achieve
