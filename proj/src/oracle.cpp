#include "isingcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace isingcc {

namespace {

std::uint32_t qubit_bit(const QubitWindow& w, int q) { return std::uint32_t{1} << (w.last - q); }

PauliString generator_pauli(int site_twice, const QubitWindow& w) {
  const HalfInt s = HalfInt::from_twice(site_twice);
  if (s.is_integer()) return {0, qubit_bit(w, s.floor()), 0};
  return {qubit_bit(w, s.floor()) | qubit_bit(w, s.ceil()), 0, 0};
}

// (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  const int flips = std::popcount(p.z & q.x);
  return {p.x ^ q.x, p.z ^ q.z, (p.phase + q.phase + 2 * flips) % 4};
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

void add_pauli(DenseMatrix& m, const PauliString& p, Complex coeff) {
  const Complex c = coeff * i_power(p.phase);
  for (std::uint32_t b = 0; b < m.size(); ++b) {
    const double sign = std::popcount(p.z & b) % 2 ? -1.0 : 1.0;
    m(b ^ p.x, b) += sign * c;
  }
}

std::once_flag g_validated;

}  // namespace

QubitWindow QubitWindow::covering(HalfInt i, HalfInt j) {
  QubitWindow w{i.floor(), j.ceil()};
  if (w.qubits() > kMaxQubits) {
    throw Error(ErrorCode::kBudget, "window of " + std::to_string(w.qubits()) + " qubits exceeds the dense limit of " +
                                        std::to_string(kMaxQubits));
  }
  return w;
}

QubitWindow QubitWindow::merged(const QubitWindow& o) const {
  return covering(HalfInt::integer(std::min(first, o.first)), HalfInt::integer(std::max(last, o.last)));
}

bool QubitWindow::holds(int site_twice) const {
  const HalfInt s = HalfInt::from_twice(site_twice);
  return s.floor() >= first && s.ceil() <= last;
}

bool QubitWindow::holds(const SiteSet& sites) const {
  for (int s : sites) {
    if (!holds(s)) return false;
  }
  return true;
}

SiteSet QubitWindow::sites() const {
  SiteSet out;
  for (int s = 2 * first; s <= 2 * last; ++s) out.push_back(s);
  return out;
}

PauliString pauli_of(const SiteSet& sites, const QubitWindow& w) {
  PauliString acc;
  for (int s : sites) acc = pauli_mul(acc, generator_pauli(s, w));
  return acc;
}

DenseMatrix to_matrix(const Operator& x, const QubitWindow& w) {
  std::call_once(g_validated, validate_representation);
  if (x.time_label() != 0) {
    throw Error(ErrorCode::kTimeLabel,
                "to_matrix needs a surface operator; expand time label " + std::to_string(x.time_label()) + " first");
  }
  DenseMatrix m(w.dim());
  for (const auto& [sites, c] : x.terms()) {
    if (!w.holds(sites)) {
      throw Error(ErrorCode::kSupport, "term " + sites_to_string(sites) + " exceeds qubit window [" +
                                           std::to_string(w.first) + "," + std::to_string(w.last) + "]");
    }
    add_pauli(m, pauli_of(sites, w), c);
  }
  return m;
}

DenseMatrix to_matrix(const ExactOperator& x, const QubitWindow& w) { return to_matrix(to_numeric(x), w); }

DenseMatrix to_matrix(const Operator& x, HalfInt i, HalfInt j) {
  if (auto support = support_interval(x)) {
    if (support->i < i || support->j > j) {
      throw Error(ErrorCode::kSupport,
                  "support " + support->to_string() + " exceeds window (" + i.to_string() + "," + j.to_string() + ")");
    }
  }
  return to_matrix(x, QubitWindow::covering(i, j));
}

Operator pauli_decompose(const DenseMatrix& m, const QubitWindow& w, const SiteSet& sites_in, double* leftover) {
  const std::size_t count = sites_in.size();
  if (count > 20) throw Error(ErrorCode::kBudget, "too many sites for a Pauli decomposition");
  const double inv_dim = 1.0 / static_cast<double>(m.size());
  auto coefficient = [&](const PauliString& p) {
    // Tr(P^dagger m) / dim
    Complex acc = 0.0;
    for (std::uint32_t b = 0; b < m.size(); ++b) {
      const double sign = std::popcount(p.z & b) % 2 ? -1.0 : 1.0;
      acc += sign * m(b ^ p.x, b);
    }
    return std::conj(i_power(p.phase)) * acc * inv_dim;
  };

  Operator out;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask) {
    SiteSet sites;
    for (std::size_t k = 0; k < count; ++k) {
      if (mask & (std::uint32_t{1} << k)) sites.push_back(sites_in[k]);
    }
    const PauliString p = pauli_of(sites, w);
    out.add_term(sites, coefficient(p));
    if (leftover) seen.emplace_back(p.x, p.z);
  }
  if (leftover) {
    *leftover = 0.0;
    std::sort(seen.begin(), seen.end());
    const std::uint32_t full = static_cast<std::uint32_t>(m.size());
    for (std::uint32_t x = 0; x < full; ++x) {
      for (std::uint32_t z = 0; z < full; ++z) {
        if (std::binary_search(seen.begin(), seen.end(), std::make_pair(x, z))) continue;
        *leftover = std::max(*leftover, std::abs(coefficient(PauliString{x, z, 0})));
      }
    }
  }
  return out;
}

void validate_representation() {
  const QubitWindow w{0, 3};
  const SiteSet sites = w.sites();
  std::vector<DenseMatrix> gens;
  for (int s : sites) {
    DenseMatrix g(w.dim());
    add_pauli(g, generator_pauli(s, w), 1.0);
    gens.push_back(std::move(g));
  }
  const auto& table = kernels::scalar_table();
  const DenseMatrix id = DenseMatrix::identity(w.dim());
  for (std::size_t a = 0; a < sites.size(); ++a) {
    if (max_abs_diff(matmul(gens[a], gens[a], table), id) != 0.0 || max_abs_diff(gens[a].adjoint(), gens[a]) != 0.0) {
      throw Error(ErrorCode::kDomain, "representation: generator is not a selfadjoint unitary");
    }
    for (std::size_t b = a + 1; b < sites.size(); ++b) {
      const DenseMatrix ab = matmul(gens[a], gens[b], table);
      DenseMatrix ba = matmul(gens[b], gens[a], table);
      if (sites[b] - sites[a] == 1) ba *= -1.0;
      if (max_abs_diff(ab, ba) != 0.0) {
        throw Error(ErrorCode::kDomain, "representation violates the commutation relations at sites " +
                                            sites_to_string({sites[a], sites[b]}));
      }
    }
  }
}

}  // namespace isingcc
