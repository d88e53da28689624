#include "isingcc/monomial.hpp"

#include <algorithm>

#include "isingcc/errors.hpp"

namespace isingcc {

std::string Phase::to_string() const {
  switch (power_) {
    case 0:
      return "+1";
    case 1:
      return "+i";
    case 2:
      return "-1";
    default:
      return "-i";
  }
}

Phase Phase::parse(const std::string& text) {
  if (text == "+1" || text == "1") return plus_one();
  if (text == "-1") return minus_one();
  if (text == "+i" || text == "i") return plus_i();
  if (text == "-i") return minus_i();
  throw Error(ErrorCode::kSchema, "unknown phase '" + text + "' (+1|-1|+i|-i)");
}

int adjacent_pairs(const SiteSet& a, const SiteSet& b) {
  int count = 0;
  for (int j : b) {
    if (std::binary_search(a.begin(), a.end(), j - 1)) ++count;
    if (std::binary_search(a.begin(), a.end(), j + 1)) ++count;
  }
  return count;
}

int internal_adjacent_pairs(const SiteSet& s) {
  int count = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] - s[k - 1] == 1) ++count;
  }
  return count;
}

int merge_sign(const SiteSet& a, const SiteSet& b) {
  int flips = 0;
  for (int j : b) {
    if (std::binary_search(a.begin(), a.end(), j + 1)) ++flips;
  }
  return flips % 2 == 0 ? 1 : -1;
}

SiteSet site_product(const SiteSet& a, const SiteSet& b) {
  SiteSet out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

GeneratorMonomial mono_mul(const GeneratorMonomial& a, const GeneratorMonomial& b) {
  GeneratorMonomial out;
  out.sites = site_product(a.sites, b.sites);
  out.phase = a.phase * b.phase;
  if (merge_sign(a.sites, b.sites) < 0) out.phase = out.phase * Phase::minus_one();
  return out;
}

GeneratorMonomial GeneratorMonomial::product_of(const std::vector<HalfInt>& ordered_sites) {
  GeneratorMonomial acc = identity();
  for (HalfInt s : ordered_sites) acc = mono_mul(acc, generator(s));
  return acc;
}

std::string sites_to_string(const SiteSet& s) {
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += "*";
    out += "U" + HalfInt::from_twice(s[k]).to_string();
  }
  return out;
}

std::string GeneratorMonomial::to_string() const {
  std::string prefix = phase == Phase::plus_one() ? "" : phase.to_string() + "*";
  return prefix + sites_to_string(sites);
}

}  // namespace isingcc
