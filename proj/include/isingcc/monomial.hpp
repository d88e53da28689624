#pragma once

#include <string>
#include <vector>

#include "isingcc/half_integer.hpp"

namespace isingcc {

/// Doubled half-integer sites, strictly ascending. The empty set is the identity.
using SiteSet = std::vector<int>;

/// Element of {+1, +i, -1, -i}, stored as the power of i.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase from_power(int k) { return Phase(((k % 4) + 4) % 4); }
  static constexpr Phase plus_one() { return Phase(0); }
  static constexpr Phase plus_i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int power() const { return power_; }
  constexpr Phase operator*(Phase o) const { return from_power(power_ + o.power_); }
  constexpr Phase conjugate() const { return from_power(-power_); }
  constexpr bool operator==(const Phase&) const = default;

  /// "+1", "-1", "+i", "-i".
  std::string to_string() const;
  static Phase parse(const std::string& text);

 private:
  constexpr explicit Phase(int k) : power_(k) {}
  int power_ = 0;
};

/// phase * U_{s1} U_{s2} ... U_{sk} with s1 < s2 < ... < sk.
struct GeneratorMonomial {
  SiteSet sites;
  Phase phase;

  static GeneratorMonomial identity() { return {}; }
  static GeneratorMonomial generator(HalfInt site) { return {{site.twice()}, Phase::plus_one()}; }
  /// Canonicalizes an arbitrary ordered product U_{s1} U_{s2} ...
  static GeneratorMonomial product_of(const std::vector<HalfInt>& ordered_sites);

  bool is_identity() const { return sites.empty(); }
  bool operator==(const GeneratorMonomial&) const = default;
  std::string to_string() const;
};

/// Number of pairs (i in a, j in b) with |i - j| = 1/2.
int adjacent_pairs(const SiteSet& a, const SiteSet& b);

/// Number of nearest-neighbour pairs inside one set.
int internal_adjacent_pairs(const SiteSet& s);

/// Canonical product. Moving each U_j of `b` left past the larger sites of
/// `a` flips the sign once per neighbour j + 1/2 in a; coincident sites cancel.
GeneratorMonomial mono_mul(const GeneratorMonomial& a, const GeneratorMonomial& b);

/// Sign (+1 or -1) picked up by the canonical product of the site sets.
int merge_sign(const SiteSet& a, const SiteSet& b);

/// Symmetric difference of two ascending site sets.
SiteSet site_product(const SiteSet& a, const SiteSet& b);

/// "U-1/2*U0*U1/2", or "1" for the empty set.
std::string sites_to_string(const SiteSet& s);

}  // namespace isingcc
