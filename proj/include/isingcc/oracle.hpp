#pragma once

#include <cstdint>
#include <vector>

#include "isingcc/dense.hpp"
#include "isingcc/operator.hpp"

namespace isingcc {

/// Contiguous block of integer qubits carrying the concrete representation
/// U_k -> Z_k (k integer), U_{k+1/2} -> X_k X_{k+1}. The first qubit is the
/// most significant bit of the basis index.
struct QubitWindow {
  int first = 0;
  int last = 0;

  static constexpr int kMaxQubits = 12;

  /// Smallest window holding every generator with site in [i, j].
  static QubitWindow covering(HalfInt i, HalfInt j);
  static QubitWindow covering(const DoubleCone& cone) { return covering(cone.i, cone.j); }
  QubitWindow merged(const QubitWindow& o) const;

  int qubits() const { return last - first + 1; }
  std::size_t dim() const { return std::size_t{1} << qubits(); }
  bool holds(int site_twice) const;
  bool holds(const SiteSet& sites) const;
  /// Every half-integer site whose generator fits, ascending (doubled).
  SiteSet sites() const;
};

/// i^phase * X^x * Z^z over the window's qubits.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  int phase = 0;
};

PauliString pauli_of(const SiteSet& sites, const QubitWindow& w);

/// Dense image of x. Throws kSupport if x has a site outside the window,
/// kTimeLabel if x carries a nonzero time label.
DenseMatrix to_matrix(const Operator& x, const QubitWindow& w);
DenseMatrix to_matrix(const ExactOperator& x, const QubitWindow& w);
DenseMatrix to_matrix(const Operator& x, HalfInt i, HalfInt j);

/// Expansion of m in the monomials whose sites lie in `sites_in`; each
/// coefficient is Tr(P_m^dagger m) / dim. `leftover` receives the largest
/// coefficient of any other Pauli string if non-null.
Operator pauli_decompose(const DenseMatrix& m, const QubitWindow& w, const SiteSet& sites_in,
                         double* leftover = nullptr);

/// Checks the representation against the nearest-neighbour relations on a
/// small window with dense products. Throws kDomain on failure; runs once
/// automatically on first use of to_matrix.
void validate_representation();

}  // namespace isingcc
