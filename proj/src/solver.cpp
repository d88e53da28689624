#include "isingcc/solver.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace isingcc {

namespace {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXd = Eigen::VectorXd;

MatrixXcd to_eigen(const DenseMatrix& m) {
  MatrixXcd out(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

DenseMatrix from_eigen(const MatrixXcd& m) {
  DenseMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

/// Selfadjoint monomials (times i where the reversal sign is -1) over the
/// sites of [i, j], identity excluded.
std::vector<Operator> selfadjoint_basis(const DoubleCone& window) {
  SiteSet sites;
  for (int s = window.i.twice(); s <= window.j.twice(); ++s) sites.push_back(s);
  std::vector<Operator> basis;
  const std::uint64_t count = std::uint64_t{1} << sites.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    SiteSet s;
    for (std::size_t b = 0; b < sites.size(); ++b) {
      if (mask >> b & 1U) s.push_back(sites[b]);
    }
    Operator h;
    h.add_term(s, internal_adjacent_pairs(s) % 2 ? Complex(0.0, 1.0) : Complex(1.0));
    basis.push_back(h);
  }
  return basis;
}

/// Real combinations of `basis` commuting with A and B: the null space of the
/// real-linear commutator map.
std::vector<Operator> commutant_basis(const std::vector<Operator>& basis, const Operator& a, const Operator& b) {
  Eigen::Index rows = 0;
  std::vector<std::vector<std::pair<SiteSet, Complex>>> columns;
  std::map<SiteSet, Eigen::Index> index;
  for (const Operator& h : basis) {
    std::vector<std::pair<SiteSet, Complex>> col;
    for (int which = 0; which < 2; ++which) {
      const Operator& x = which == 0 ? a : b;
      const Operator c = h * x - x * h;
      for (const auto& [sites, coeff] : c.terms()) {
        SiteSet key = sites;
        key.insert(key.begin(), which);  // separates the two commutators
        if (!index.count(key)) index.emplace(key, rows++);
        col.emplace_back(key, coeff);
      }
    }
    columns.push_back(std::move(col));
  }
  Eigen::MatrixXd m =
      Eigen::MatrixXd::Zero(std::max<Eigen::Index>(2 * rows, 1), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (const auto& [key, coeff] : columns[k]) {
      const Eigen::Index r = index.at(key);
      m(2 * r, static_cast<Eigen::Index>(k)) += coeff.real();
      m(2 * r + 1, static_cast<Eigen::Index>(k)) += coeff.imag();
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  const Eigen::MatrixXd& v = svd.matrixV();
  std::vector<Operator> out;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (k < sv.size() && sv(k) > cutoff) continue;
    Operator g;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double w = v(static_cast<Eigen::Index>(j), k);
      if (std::abs(w) > 1e-13) g = g + op_scale(basis[j], Complex(w));
    }
    if (!g.is_zero()) out.push_back(g);
  }
  return out;
}

class Problem {
 public:
  Problem(const LambdaState<Complex>& s, const DoubleCone& window, std::vector<Operator> basis, int rank,
          int max_qubits)
      : window_(window), search_(QubitWindow::covering(window)), basis_(std::move(basis)), rank_(rank) {
    full_ = s.window().merged(search_);
    if (full_.qubits() > max_qubits) {
      throw Error(ErrorCode::kBudget, "solver window needs " + std::to_string(full_.qubits()) +
                                          " qubits; the budget is " + std::to_string(max_qubits));
    }
    for (const Operator& h : basis_) basis_small_.push_back(to_eigen(to_matrix(h, search_)));
    rho_ = s.density_matrix(full_);
    for (int p = 0; p < 4; ++p) sectors_[p] = to_matrix(s.sector(kSectors[p]), full_);
    sites_in_ = window_sites();
  }

  int dimension() const { return static_cast<int>(basis_.size()); }

  /// C as a window-algebra operator.
  Operator projection(const VectorXd& theta) const {
    const std::size_t n = search_.dim();
    MatrixXcd h = MatrixXcd::Zero(n, n);
    for (int k = 0; k < dimension(); ++k) h += theta(k) * basis_small_[k];
    const Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(h);
    const MatrixXcd top = eig.eigenvectors().rightCols(rank_);
    return pauli_decompose(from_eigen(top * top.adjoint()), search_, sites_in_);
  }

  std::array<double, 2> residuals(const Operator& c) const {
    const DenseMatrix cm = to_matrix(c, full_);
    const DenseMatrix cp = DenseMatrix::identity(full_.dim()) - cm;
    std::array<double, 2> out{};
    int k = 0;
    for (const DenseMatrix* x : {&cm, &cp}) {
      const DenseMatrix rho_k = matmul(matmul(*x, rho_), *x);
      std::array<double, 4> v{};
      for (int p = 0; p < 4; ++p) v[p] = trace_of_product(sectors_[p], rho_k).real();
      out[k++] = v[0] * v[1] - v[2] * v[3];
    }
    return out;
  }

  Eigen::Vector2d f(const VectorXd& theta) const {
    const auto r = residuals(projection(theta));
    return {r[0], r[1]};
  }

 private:
  SiteSet window_sites() const {
    SiteSet s;
    for (int t = window_.i.twice(); t <= window_.j.twice(); ++t) s.push_back(t);
    return s;
  }

  DoubleCone window_;
  QubitWindow search_;
  QubitWindow full_;
  std::vector<Operator> basis_;
  std::vector<MatrixXcd> basis_small_;
  int rank_;
  DenseMatrix rho_;
  std::array<DenseMatrix, 4> sectors_;
  SiteSet sites_in_;
};

/// Levenberg-Marquardt on the two residuals with a forward-difference
/// Jacobian; with fewer residuals than parameters the step is the damped
/// minimum-norm one.
VectorXd minimize(const Problem& prob, VectorXd theta, const SolverConfig& cfg, double& best) {
  Eigen::Vector2d fx = prob.f(theta);
  best = fx.cwiseAbs().maxCoeff();
  double mu = 1e-3;
  const int d = prob.dimension();
  for (int it = 0; it < cfg.max_iters && best > 1e-3 * cfg.tol; ++it) {
    Eigen::MatrixXd jac(2, d);
    const double scale = std::max(1.0, theta.norm());
    for (int k = 0; k < d; ++k) {
      VectorXd t = theta;
      const double h = 1e-7 * scale;
      t(k) += h;
      jac.col(k) = (prob.f(t) - fx) / h;
    }
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      const Eigen::Matrix2d jjt = jac * jac.transpose() + mu * Eigen::Matrix2d::Identity();
      const VectorXd step = -jac.transpose() * jjt.ldlt().solve(fx);
      const VectorXd cand = theta + step;
      const Eigen::Vector2d fc = prob.f(cand);
      if (fc.squaredNorm() < fx.squaredNorm()) {
        theta = cand;
        fx = fc;
        mu = std::max(mu / 10.0, 1e-15);
        improved = true;
      } else {
        mu *= 10.0;
      }
    }
    best = std::min(best, fx.cwiseAbs().maxCoeff());
    if (!improved) break;
  }
  return theta;
}

Candidate annotate(const LambdaState<Complex>& s, Operator c, const std::array<double, 2>& r, const DoubleCone& loc_a,
                   const DoubleCone& loc_b, int restart) {
  Candidate out;
  out.residuals = r;
  out.residual = std::max(std::abs(r[0]), std::abs(r[1]));
  out.restart = restart;
  const Operator cp = Operator::identity() - c;
  out.below_c = detail::cell_below(s, c, 1e-8);
  out.below_c_perp = detail::cell_below(s, cp, 1e-8);
  out.trivial = !out.below_c.empty() && !out.below_c_perp.empty();
  out.commutes_with_ab = commutes(c, s.a(), 1e-8) && commutes(c, s.b(), 1e-8);
  out.support = support_interval(c);
  const Region where = out.support ? Region::of(*out.support) : Region();
  out.in_weak_past = where.is_subset_of(pasts(loc_a, loc_b, PastMode::kWeak));
  out.in_common_past = where.is_subset_of(pasts(loc_a, loc_b, PastMode::kCommon));
  out.in_strong_past = where.is_subset_of(pasts(loc_a, loc_b, PastMode::kStrong));
  out.c = std::move(c);
  return out;
}

bool fits(const Operator& x, const DoubleCone& window) {
  const auto sup = support_interval(x);
  return !sup || (sup->i >= window.i && sup->j <= window.j);
}

}  // namespace

std::uint64_t restart_seed(std::uint64_t master, int restart) {
  // splitmix64 finalizer
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SolverResult solve_noncommuting_cc(const LambdaState<Complex>& s, const DoubleCone& window, const SolverConfig& cfg,
                                   const DoubleCone& loc_a, const DoubleCone& loc_b) {
  if (window.t != 0) throw Error(ErrorCode::kDomain, "the search window must be a surface interval (t = 0)");
  if (cfg.restarts < 0 || cfg.max_iters < 0 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::kDomain, "solver config needs restarts, max_iters >= 0 and tol > 0");
  }
  const QubitWindow search = QubitWindow::covering(window);
  const int dim = static_cast<int>(search.dim());
  const int rank = cfg.rank == 0 ? dim / 2 : cfg.rank;
  if (rank < 1 || rank >= dim) {
    throw Error(ErrorCode::kDomain, "rank " + std::to_string(rank) + " outside [1, " + std::to_string(dim - 1) + "]");
  }
  std::vector<Operator> basis = selfadjoint_basis(window);
  if (cfg.commuting_constraint) basis = commutant_basis(basis, s.a(), s.b());

  SolverResult result;
  result.rank = rank;
  result.basis_size = static_cast<int>(basis.size());
  const Problem prob(s, window, basis, rank, cfg.max_qubits);

  if (cfg.include_trivial) {
    for (const Operator& x : {s.a(), s.b()}) {
      if (!fits(x, window)) continue;
      const auto r = prob.residuals(x);
      if (std::max(std::abs(r[0]), std::abs(r[1])) < cfg.tol)
        result.candidates.push_back(annotate(s, x, r, loc_a, loc_b, -1));
    }
  }
  if (basis.empty()) {
    result.restart_residuals.assign(static_cast<std::size_t>(cfg.restarts), std::nan(""));
    return result;
  }

  for (int k = 0; k < cfg.restarts; ++k) {
    std::mt19937_64 rng(restart_seed(cfg.seed, k));
    std::normal_distribution<double> normal;
    VectorXd theta(prob.dimension());
    for (int j = 0; j < prob.dimension(); ++j) theta(j) = normal(rng);
    double best = 0.0;
    theta = minimize(prob, theta, cfg, best);
    Operator c = prob.projection(theta);
    const auto r = prob.residuals(c);
    const double res = std::max(std::abs(r[0]), std::abs(r[1]));
    result.restart_residuals.push_back(res);
    if (res >= cfg.tol) continue;
    bool duplicate = false;
    for (const Candidate& seen : result.candidates) {
      duplicate = duplicate || approx_equal(seen.c, c, 1e-6) || approx_equal(seen.c, Operator::identity() - c, 1e-6);
    }
    if (!duplicate) result.candidates.push_back(annotate(s, std::move(c), r, loc_a, loc_b, k));
  }
  return result;
}

SolverResult solve_noncommuting_cc(const LambdaState<Complex>& s, const DoubleCone& window, const SolverConfig& cfg) {
  const auto sa = support_interval(s.a());
  const auto sb = support_interval(s.b());
  const DoubleCone fallback{0, HalfInt::integer(0), HalfInt::integer(0)};
  return solve_noncommuting_cc(s, window, cfg, sa.value_or(fallback), sb.value_or(fallback));
}

}  // namespace isingcc
