#include "isingcc/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "isingcc/errors.hpp"

namespace isingcc {

namespace {

// Light-cone lattice index of the Cauchy cone of `site`, shifted by t steps.
LatticePoint site_point(int t, HalfInt site) {
  const int t2 = 2 * t + (site.is_integer() ? 0 : 1);
  const int x2 = site.twice();
  return {(t2 + x2) / 2, (t2 - x2) / 2};
}

LatticePoint reflect(LatticePoint p) { return {-p.b, -p.a}; }

// Keep only maximal (for pasts) apexes.
void prune_dominated(std::vector<LatticePoint>& apexes, bool keep_max) {
  std::sort(apexes.begin(), apexes.end());
  apexes.erase(std::unique(apexes.begin(), apexes.end()), apexes.end());
  std::vector<LatticePoint> kept;
  for (const auto& p : apexes) {
    bool dominated = false;
    for (const auto& q : apexes) {
      if (q == p) continue;
      if (keep_max ? p.precedes_or_equals(q) : q.precedes_or_equals(p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(p);
  }
  apexes = std::move(kept);
}

// Is every point of the backward cone of `p` inside `r`? The part of I_-(p)
// outside r's own backward cones must be finite and covered by the rest.
bool downset_covered(const LatticePoint& p, const Region& r) {
  const auto& apexes = r.past_apexes();
  int max_b_for_a = 0;
  int max_a_for_b = 0;
  bool covers_a_ray = false;  // some apex with a >= p.a
  bool covers_b_ray = false;  // some apex with b >= p.b
  for (const auto& d : apexes) {
    if (d.a >= p.a) {
      max_b_for_a = covers_a_ray ? std::max(max_b_for_a, d.b) : d.b;
      covers_a_ray = true;
    }
    if (d.b >= p.b) {
      max_a_for_b = covers_b_ray ? std::max(max_a_for_b, d.a) : d.a;
      covers_b_ray = true;
    }
  }
  if (!covers_a_ray || !covers_b_ray) return false;
  // Uncovered points x <= p satisfy x.a > max_a_for_b and x.b > max_b_for_a.
  for (int a = max_a_for_b + 1; a <= p.a; ++a) {
    for (int b = max_b_for_a + 1; b <= p.b; ++b) {
      if (!r.contains(LatticePoint{a, b})) return false;
    }
  }
  return true;
}

}  // namespace

MinimalCone MinimalCone::at(HalfInt t, HalfInt x) {
  if ((t.twice() - x.twice()) % 2 != 0) {
    throw Error(ErrorCode::kParity,
                "minimal cone center (" + t.to_string() + ", " + x.to_string() + ") violates t - x in Z");
  }
  return MinimalCone(t.twice(), x.twice());
}

MinimalCone MinimalCone::from_lattice(LatticePoint p) { return MinimalCone(p.a + p.b, p.a - p.b); }

MinimalCone MinimalCone::of_site(HalfInt site, int time_translate) {
  return from_lattice(site_point(time_translate, site));
}

MinimalCone MinimalCone::translated(int dt, int dx) const { return MinimalCone(t2_ + 2 * dt, x2_ + 2 * dx); }

std::string MinimalCone::to_string() const { return "(" + t().to_string() + "," + x().to_string() + ")"; }

DoubleCone DoubleCone::make(int t, HalfInt i, HalfInt j) {
  if (j < i) {
    throw Error(ErrorCode::kDomain, "double cone interval (" + i.to_string() + "," + j.to_string() + ") has i > j");
  }
  return DoubleCone{t, i, j};
}

DoubleCone DoubleCone::minimal(HalfInt t, HalfInt x) {
  MinimalCone::at(t, x);  // parity check
  // Integer-site cones sit at integer times, half-integer sites half a step later.
  const int label = x.is_integer() ? t.twice() / 2 : (t.twice() - 1) / 2;
  return DoubleCone{label, x, x};
}

int DoubleCone::a_lo() const { return site_point(t, i).a; }
int DoubleCone::a_hi() const { return site_point(t, j).a; }
int DoubleCone::b_lo() const { return site_point(t, j).b; }
int DoubleCone::b_hi() const { return site_point(t, i).b; }

bool DoubleCone::contains(const MinimalCone& m) const {
  const auto p = m.lattice();
  return p.a >= a_lo() && p.a <= a_hi() && p.b >= b_lo() && p.b <= b_hi();
}

std::vector<MinimalCone> DoubleCone::cones() const {
  std::vector<MinimalCone> out;
  for (int a = a_lo(); a <= a_hi(); ++a) {
    for (int b = b_lo(); b <= b_hi(); ++b) out.push_back(MinimalCone::from_lattice({a, b}));
  }
  return out;
}

DoubleCone DoubleCone::translated(int dt, int dx) const {
  return DoubleCone{t + dt, i + HalfInt::integer(dx), j + HalfInt::integer(dx)};
}

std::string DoubleCone::to_string() const {
  return "O_{" + i.to_string() + "," + j.to_string() + "}@t=" + std::to_string(t);
}

Region Region::of_cones(std::vector<LatticePoint> cones) {
  Region r;
  r.points_ = std::move(cones);
  r.normalize();
  return r;
}

Region Region::of(const DoubleCone& cone) {
  std::vector<LatticePoint> pts;
  for (const auto& m : cone.cones()) pts.push_back(m.lattice());
  return of_cones(std::move(pts));
}

Region Region::past_of(std::vector<LatticePoint> apexes) {
  Region r;
  r.past_apexes_ = std::move(apexes);
  r.normalize();
  return r;
}

Region Region::future_of(std::vector<LatticePoint> apexes) {
  Region r;
  r.future_apexes_ = std::move(apexes);
  r.normalize();
  return r;
}

void Region::normalize() {
  prune_dominated(past_apexes_, true);
  prune_dominated(future_apexes_, false);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  // Drop explicit points already covered by a cone.
  std::erase_if(points_, [this](const LatticePoint& p) {
    for (const auto& d : past_apexes_) {
      if (p.precedes_or_equals(d)) return true;
    }
    for (const auto& d : future_apexes_) {
      if (d.precedes_or_equals(p)) return true;
    }
    return false;
  });
}

bool Region::empty() const { return points_.empty() && past_apexes_.empty() && future_apexes_.empty(); }

bool Region::contains(const LatticePoint& p) const {
  if (std::binary_search(points_.begin(), points_.end(), p)) return true;
  for (const auto& d : past_apexes_) {
    if (p.precedes_or_equals(d)) return true;
  }
  for (const auto& d : future_apexes_) {
    if (d.precedes_or_equals(p)) return true;
  }
  return false;
}

bool Region::contains(const DoubleCone& c) const {
  for (int a = c.a_lo(); a <= c.a_hi(); ++a) {
    for (int b = c.b_lo(); b <= c.b_hi(); ++b) {
      if (!contains(LatticePoint{a, b})) return false;
    }
  }
  return true;
}

bool Region::is_subset_of(const Region& other) const {
  for (const auto& p : points_) {
    if (!other.contains(p)) return false;
  }
  for (const auto& p : past_apexes_) {
    if (!downset_covered(p, other)) return false;
  }
  if (!future_apexes_.empty()) {
    const Region mirrored = other.reflected();
    for (const auto& p : future_apexes_) {
      if (!downset_covered(reflect(p), mirrored)) return false;
    }
  }
  return true;
}

Region Region::united(const Region& other) const {
  Region r = *this;
  r.points_.insert(r.points_.end(), other.points_.begin(), other.points_.end());
  r.past_apexes_.insert(r.past_apexes_.end(), other.past_apexes_.begin(), other.past_apexes_.end());
  r.future_apexes_.insert(r.future_apexes_.end(), other.future_apexes_.begin(), other.future_apexes_.end());
  r.normalize();
  return r;
}

Region Region::intersected(const Region& other) const {
  Region r;
  for (const auto& p : points_) {
    if (other.contains(p)) r.points_.push_back(p);
  }
  for (const auto& p : other.points_) {
    if (contains(p)) r.points_.push_back(p);
  }
  for (const auto& p : past_apexes_) {
    for (const auto& q : other.past_apexes_) {
      r.past_apexes_.push_back({std::min(p.a, q.a), std::min(p.b, q.b)});
    }
  }
  for (const auto& p : future_apexes_) {
    for (const auto& q : other.future_apexes_) {
      r.future_apexes_.push_back({std::max(p.a, q.a), std::max(p.b, q.b)});
    }
  }
  // A backward cone meets a forward cone in a finite diamond.
  auto add_diamond = [&r](const LatticePoint& top, const LatticePoint& bottom) {
    for (int a = bottom.a; a <= top.a; ++a) {
      for (int b = bottom.b; b <= top.b; ++b) r.points_.push_back({a, b});
    }
  };
  for (const auto& p : past_apexes_) {
    for (const auto& q : other.future_apexes_) add_diamond(p, q);
  }
  for (const auto& q : future_apexes_) {
    for (const auto& p : other.past_apexes_) add_diamond(p, q);
  }
  r.normalize();
  return r;
}

Region Region::translated(int dt, int dx) const {
  auto shift = [dt, dx](LatticePoint p) { return LatticePoint{p.a + dt + dx, p.b + dt - dx}; };
  Region r;
  for (const auto& p : points_) r.points_.push_back(shift(p));
  for (const auto& p : past_apexes_) r.past_apexes_.push_back(shift(p));
  for (const auto& p : future_apexes_) r.future_apexes_.push_back(shift(p));
  r.normalize();
  return r;
}

Region Region::reflected() const {
  Region r;
  for (const auto& p : points_) r.points_.push_back(reflect(p));
  for (const auto& p : past_apexes_) r.future_apexes_.push_back(reflect(p));
  for (const auto& p : future_apexes_) r.past_apexes_.push_back(reflect(p));
  r.normalize();
  return r;
}

std::string Region::to_string() const {
  std::ostringstream os;
  os << "{";
  const char* sep = "";
  for (const auto& p : points_) {
    os << sep << MinimalCone::from_lattice(p).to_string();
    sep = ", ";
  }
  for (const auto& p : past_apexes_) {
    os << sep << "I-" << MinimalCone::from_lattice(p).to_string();
    sep = ", ";
  }
  for (const auto& p : future_apexes_) {
    os << sep << "I+" << MinimalCone::from_lattice(p).to_string();
    sep = ", ";
  }
  os << "}";
  return os.str();
}

PastMode parse_past_mode(const std::string& name) {
  if (name == "weak") return PastMode::kWeak;
  if (name == "common") return PastMode::kCommon;
  if (name == "strong") return PastMode::kStrong;
  throw Error(ErrorCode::kSchema, "unknown past mode '" + name + "' (weak|common|strong)");
}

const char* to_string(PastMode mode) {
  switch (mode) {
    case PastMode::kWeak:
      return "weak";
    case PastMode::kCommon:
      return "common";
    case PastMode::kStrong:
      return "strong";
  }
  return "?";
}

bool spacelike_separated(const DoubleCone& a, const DoubleCone& b) {
  // Some point of b is in the causal past of a point of a iff the earliest
  // cone of b precedes the latest cone of a (open diamonds touching along a
  // light ray count as causally connected).
  const bool b_before_a = b.bottom().precedes_or_equals(a.top());
  const bool a_before_b = a.bottom().precedes_or_equals(b.top());
  return !b_before_a && !a_before_b;
}

Region causal_past(const Region& r) {
  if (r.empty()) throw Error(ErrorCode::kEmptyRegion, "causal past of an empty region");
  if (!r.future_apexes().empty()) {
    throw Error(ErrorCode::kDomain, "causal past of a region unbounded towards the future");
  }
  std::vector<LatticePoint> apexes = r.points();
  apexes.insert(apexes.end(), r.past_apexes().begin(), r.past_apexes().end());
  return Region::past_of(std::move(apexes));
}

Region causal_future(const Region& r) { return causal_past(r.reflected()).reflected(); }

Region pasts(const DoubleCone& a, const DoubleCone& b, PastMode mode) {
  switch (mode) {
    case PastMode::kWeak:
      return Region::past_of({a.top(), b.top()});
    case PastMode::kCommon:
      return Region::past_of({a.top()}).intersected(Region::past_of({b.top()}));
    case PastMode::kStrong: {
      // Intersection over every minimal cone of a and b of its backward cone.
      const LatticePoint lo{std::min(a.a_lo(), b.a_lo()), std::min(a.b_lo(), b.b_lo())};
      return Region::past_of({lo});
    }
  }
  return {};
}

}  // namespace isingcc
