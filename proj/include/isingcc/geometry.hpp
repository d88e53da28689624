#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isingcc/half_integer.hpp"

namespace isingcc {

/// Index of a minimal double cone in light-cone coordinates. With doubled
/// coordinates (2t, 2x) of the cone center, a = (2t + 2x) / 2 and
/// b = (2t - 2x) / 2. Every lattice point is a valid minimal cone; the cone
/// occupies the open square (2a-1, 2a+1) x (2b-1, 2b+1) in (2u, 2v).
struct LatticePoint {
  int a = 0;
  int b = 0;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
  /// Causal order on minimal cones: this cone lies in the backward cone of `o`.
  bool precedes_or_equals(const LatticePoint& o) const { return a <= o.a && b <= o.b; }
};

/// Unit-diameter diamond centered at (t, x) with t - x in Z.
class MinimalCone {
 public:
  /// Throws kParity if t - x is not an integer.
  static MinimalCone at(HalfInt t, HalfInt x);
  static MinimalCone from_lattice(LatticePoint p);
  /// Cauchy-surface cone of a chain site: time 0 for integer sites, 1/2 otherwise.
  static MinimalCone of_site(HalfInt site, int time_translate = 0);

  HalfInt t() const { return HalfInt::from_twice(t2_); }
  HalfInt x() const { return HalfInt::from_twice(x2_); }
  LatticePoint lattice() const { return {(t2_ + x2_) / 2, (t2_ - x2_) / 2}; }

  MinimalCone translated(int dt, int dx) const;
  std::string to_string() const;

  bool operator==(const MinimalCone&) const = default;

 private:
  MinimalCone(int t2, int x2) : t2_(t2), x2_(x2) {}
  int t2_ = 0;
  int x2_ = 0;
};

/// The double cone spanned by the cones of sites i..j, translated by t time
/// steps. DoubleCone{t, x, x} is the minimal cone of site x at time t.
struct DoubleCone {
  int t = 0;
  HalfInt i;
  HalfInt j;

  /// Throws kDomain if i > j.
  static DoubleCone make(int t, HalfInt i, HalfInt j);
  /// The double cone equal to a single minimal cone (t, x) of the lattice.
  static DoubleCone minimal(HalfInt t, HalfInt x);

  int a_lo() const;
  int a_hi() const;
  int b_lo() const;
  int b_hi() const;
  /// Latest minimal cone of the diamond; its backward cone is I_-(this).
  LatticePoint top() const { return {a_hi(), b_hi()}; }
  LatticePoint bottom() const { return {a_lo(), b_lo()}; }

  bool contains(const MinimalCone& m) const;
  std::vector<MinimalCone> cones() const;
  DoubleCone translated(int dt, int dx) const;
  std::string to_string() const;

  bool operator==(const DoubleCone&) const = default;
};

/// A set of minimal cones: explicit members, plus the backward cones of
/// `past_apexes` and the forward cones of `future_apexes`.
class Region {
 public:
  Region() = default;
  static Region of_cones(std::vector<LatticePoint> cones);
  static Region of(const DoubleCone& cone);
  static Region past_of(std::vector<LatticePoint> apexes);
  static Region future_of(std::vector<LatticePoint> apexes);

  bool empty() const;
  bool bounded() const { return past_apexes_.empty() && future_apexes_.empty(); }

  bool contains(const LatticePoint& p) const;
  bool contains(const MinimalCone& m) const { return contains(m.lattice()); }
  bool contains(const DoubleCone& c) const;
  bool is_subset_of(const Region& other) const;

  Region united(const Region& other) const;
  Region intersected(const Region& other) const;
  Region translated(int dt, int dx) const;
  /// Time reflection t -> -t, mapping pasts to futures.
  Region reflected() const;

  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<LatticePoint>& past_apexes() const { return past_apexes_; }
  const std::vector<LatticePoint>& future_apexes() const { return future_apexes_; }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<LatticePoint> points_;
  std::vector<LatticePoint> past_apexes_;
  std::vector<LatticePoint> future_apexes_;
};

enum class PastMode { kWeak, kCommon, kStrong };

/// Throws kSchema on an unknown name.
PastMode parse_past_mode(const std::string& name);
const char* to_string(PastMode mode);

bool spacelike_separated(const DoubleCone& a, const DoubleCone& b);

/// I_-(r): union of the backward cones. Throws kEmptyRegion on an empty region.
Region causal_past(const Region& r);
Region causal_future(const Region& r);

Region pasts(const DoubleCone& a, const DoubleCone& b, PastMode mode);

}  // namespace isingcc
