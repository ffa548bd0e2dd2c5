#include "gwnoise/verify.hpp"

#include <cmath>
#include <functional>

#include "gwnoise/interferometer.hpp"
#include "gwnoise/noise.hpp"
#include "gwnoise/states.hpp"

namespace gwnoise {

namespace {

constexpr Complex kI{0.0, 1.0};

bool rel_close(double a, double b, double rel, double abs_tol = 1e-9) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_tol;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

struct Harness {
  std::ostream& out;
  std::uint64_t seed;
  bool all_ok = true;

  void check(const std::string& name, bool ok) {
    out << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
    all_ok = all_ok && ok;
  }
};

bool check_irrep_algebra(int max_twice_j) {
  for (int twice_j = 0; twice_j <= max_twice_j; ++twice_j) {
    const IrrepMatrices m = build_irrep_matrices(IrrepLabel(twice_j));
    if (max_abs(m.jx - m.jx.adjoint()) > 1e-12) return false;
    if (max_abs(m.jy - m.jy.adjoint()) > 1e-12) return false;
    if (max_abs(m.jx * m.jy - m.jy * m.jx - kI * m.jz) > 1e-10) return false;
    if (max_abs(m.jy * m.jz - m.jz * m.jy - kI * m.jx) > 1e-10) return false;
    if (max_abs(m.jz * m.jx - m.jx * m.jz - kI * m.jy) > 1e-10) return false;
    const double j = 0.5 * twice_j;
    const Matrix casimir = m.jx * m.jx + m.jy * m.jy + m.jz * m.jz;
    if (max_abs(casimir - j * (j + 1) * Matrix::Identity(m.jx.rows(), m.jx.cols())) > 1e-10)
      return false;
  }
  return true;
}

bool check_schwinger_consistency(int n_max) {
  const FockOperators fock = build_fock_operators(n_max);
  // J^2 = (N/2)(N/2 + 1) on every complete shell n1 + n2 <= n_max; shells
  // above that lose ladder partners to the per-mode truncation
  const Matrix j2 = fock.jx * fock.jx + fock.jy * fock.jy + fock.jz * fock.jz;
  const Matrix rhs = 0.5 * fock.n * (0.5 * fock.n + Matrix::Identity(fock.n.rows(), fock.n.cols()));
  const Matrix diff = j2 - rhs;
  for (int r1 = 0; r1 <= n_max; ++r1)
    for (int r2 = 0; r2 + r1 <= n_max; ++r2)
      for (int c1 = 0; c1 <= n_max; ++c1)
        for (int c2 = 0; c2 + c1 <= n_max; ++c2)
          if (std::abs(diff(r1 * (n_max + 1) + r2, c1 * (n_max + 1) + c2)) > 1e-10) return false;

  // per shell n1 + n2 = 2j, |n1,n2> <-> |j, m = (n1-n2)/2> reproduces the
  // irrep matrix elements
  const int d = n_max + 1;
  auto fock_index = [&](int n1, int n2) { return n1 * d + n2; };
  for (int total = 0; total <= n_max; ++total) {
    const IrrepMatrices irrep = build_irrep_matrices(IrrepLabel(total));
    const int dim = total + 1;
    Matrix sub_jx(dim, dim), sub_jy(dim, dim), sub_jz(dim, dim);
    // irrep ordering is m = j ... -j, i.e. n1 = total ... 0
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        const int row = fock_index(total - a, a);
        const int col = fock_index(total - b, b);
        sub_jx(a, b) = fock.jx(row, col);
        sub_jy(a, b) = fock.jy(row, col);
        sub_jz(a, b) = fock.jz(row, col);
      }
    }
    if (max_abs(sub_jx - irrep.jx) > 1e-10) return false;
    if (max_abs(sub_jy - irrep.jy) > 1e-10) return false;
    if (max_abs(sub_jz - irrep.jz) > 1e-10) return false;
  }
  return true;
}

bool check_n_invariance(int n_max, std::mt19937_64& rng, int trials) {
  const FockBasis basis{n_max, n_max};
  const Evolver evolver{Basis{basis}};
  std::uniform_real_distribution<double> phi_dist(-3.0, 3.0);
  std::normal_distribution<double> normal;
  for (int t = 0; t < trials; ++t) {
    Vector amp = Vector::Zero(basis.dim());
    for (int n1 = 0; n1 <= n_max - 2; ++n1)
      for (int n2 = 0; n2 <= n_max - 2; ++n2)
        amp(basis.index(n1, n2)) = Complex(normal(rng), normal(rng));
    const TwoModeState state(basis, std::move(amp));
    const TwoModeState evolved = evolver.evolve(state, phi_dist(rng));
    const MomentSet before = moments_of(state);
    const MomentSet after = moments_of(evolved);
    if (!rel_close(before.nbar, after.nbar, 1e-10, 1e-10)) return false;
  }
  return true;
}

bool moments_match(const MomentSet& a, const MomentSet& b, double rel) {
  return rel_close(a.mean_jx, b.mean_jx, rel) && rel_close(a.mean_jy, b.mean_jy, rel) &&
         rel_close(a.mean_jz, b.mean_jz, rel) && rel_close(a.var_jx, b.var_jx, rel) &&
         rel_close(a.var_jy, b.var_jy, rel) && rel_close(a.var_jz, b.var_jz, rel) &&
         rel_close(a.cov_jy_jz, b.cov_jy_jz, rel) && rel_close(a.nbar, b.nbar, rel) &&
         rel_close(a.nbar1, b.nbar1, rel) && rel_close(a.nbar2, b.nbar2, rel);
}

bool check_family_moments(const InputStateSpec& spec) {
  const auto analytic = analytic_moments(spec);
  if (!analytic) return false;
  const MomentSet oracle = moments_of(spec_to_state(spec));
  return moments_match(*analytic, oracle, 1e-7);
}

bool check_coherent_moments(const std::vector<double>& magnitudes) {
  for (double mag : magnitudes) {
    for (double phase : {0.0, 0.9, std::numbers::pi / 4}) {
      const Complex alpha = mag * std::exp(kI * phase);
      if (!check_family_moments(CoherentVacuum{alpha})) return false;
      // phase independence of the analytic moment set
      const MomentSet with_phase = *analytic_moments(CoherentVacuum{alpha});
      const MomentSet at_zero = *analytic_moments(CoherentVacuum{Complex(mag, 0)});
      if (!moments_match(with_phase, at_zero, 1e-12)) return false;
    }
  }
  return true;
}

bool check_squeezed_moments(const std::vector<double>& alphas, const std::vector<double>& rs) {
  for (double alpha : alphas)
    for (double r : rs)
      if (!check_family_moments(CoherentSqueezed{Complex(alpha, 0), r, 0.0})) return false;
  return true;
}

bool check_twin_fock_moments(int n_limit) {
  for (int n = 0; n <= n_limit; ++n)
    if (!check_family_moments(TwinFock{n})) return false;
  return true;
}

bool check_intelligent_moments(const std::vector<int>& twice_js) {
  for (int twice_j : twice_js) {
    for (double eta : {0.1, 0.5, 0.9}) {
      // smallest |m0| allowed by parity, plus the extremes
      for (int twice_m0 : {twice_j % 2, twice_j, -twice_j}) {
        if (!check_family_moments(Intelligent{IrrepLabel(twice_j), eta, twice_m0})) return false;
      }
    }
  }
  return true;
}

bool check_intelligent_spectrum(int max_twice_j) {
  for (int twice_j = 1; twice_j <= max_twice_j; ++twice_j) {
    const IrrepLabel label(twice_j);
    for (double eta : {0.3, 0.7}) {
      const auto spectrum = intelligent_spectrum(label, eta);
      const double root = std::sqrt(1.0 - eta * eta);
      for (int i = 0; i < static_cast<int>(spectrum.size()); ++i) {
        const double m0 = label.j() - i;  // sorted by descending imaginary part
        if (std::abs(spectrum[i] - kI * (m0 * root)) > 1e-9) return false;
      }
      for (int twice_m0 = -twice_j; twice_m0 <= twice_j; twice_m0 += 2) {
        const auto sol = solve_intelligent_state(label, eta, twice_m0);
        const MomentSet m = moments_of(sol.state);
        const double product = std::sqrt(m.var_jx * m.var_jy);
        if (!rel_close(product, 0.5 * std::abs(m.mean_jz), 1e-8, 1e-10)) return false;
        if (m.var_jx > 1e-12 &&
            !rel_close(std::sqrt(m.var_jy / m.var_jx), std::abs(eta), 1e-7, 1e-9))
          return false;
        if (m.var_jy >= m.var_jx + 1e-12) return false;  // squeezed in Jy
      }
    }
  }
  return true;
}

bool check_picture_equivalence(std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> twice_j_dist(1, 16);
  std::uniform_real_distribution<double> phi_dist(-3.0, 3.0);
  for (int t = 0; t < trials; ++t) {
    const IrrepLabel label(twice_j_dist(rng));
    const TwoModeState state = random_irrep_state(label, rng);
    const double phi = phi_dist(rng);
    const PhotonDifferenceStats heis = heisenberg_transform(moments_of(state), phi);
    const TwoModeState evolved = schroedinger_evolve(state, phi);
    const MomentSet after = moments_of(evolved);
    if (!rel_close(heis.mean, 2.0 * after.mean_jz, 1e-9)) return false;
    if (!rel_close(heis.variance, 4.0 * after.var_jz, 1e-9)) return false;
    if (!rel_close(evolved.amplitudes().norm(), 1.0, 1e-10, 0.0)) return false;
  }
  return true;
}

bool check_rotation_composition(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int t = 0; t < 32; ++t) {
    const double p1 = angle(rng), p2 = angle(rng);
    if ((interferometer_rotation(p1) * interferometer_rotation(p2) -
         interferometer_rotation(p1 + p2))
            .cwiseAbs()
            .maxCoeff() > 1e-12)
      return false;
    if ((interferometer_rotation(p1) - rotation_x(p1)).cwiseAbs().maxCoeff() > 1e-12) return false;
  }
  return true;
}

bool check_uncertainty_relation(std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> twice_j_dist(1, 16);
  for (int t = 0; t < trials; ++t) {
    const MomentSet m = moments_of(random_irrep_state(IrrepLabel(twice_j_dist(rng)), rng));
    if (m.var_jx < 0 || m.var_jy < 0 || m.var_jz < 0) return false;
    const double lhs = m.var_jx * m.var_jy;
    const double rhs = 0.25 * m.mean_jz * m.mean_jz;
    if (lhs < rhs * (1.0 - 1e-9) - 1e-12) return false;
    if (!rel_close(m.nbar, m.nbar1 + m.nbar2, 1e-9, 1e-12)) return false;
  }
  return true;
}

bool check_universality(std::mt19937_64& rng, int trials) {
  const DetectorConfig config = DetectorConfig::preset("initial-ligo");
  for (int t = 0; t < trials; ++t) {
    const Vector mode1 = random_mode_amplitudes(10, rng);
    Vector vac = Vector::Zero(5);
    vac(0) = 1.0;
    const TwoModeState state = TwoModeState::product_fock(mode1, vac);
    const MomentSet m = moments_of(state);
    if (m.nbar < 1e-6) continue;
    if (!rel_close(m.var_jx, m.var_jy, 1e-9)) return false;
    const NoiseBudget oracle = budget_from_moments(m, config);
    const NoiseBudget closed = budget_coherent(m.nbar, config);
    if (!rel_close(oracle.dz_pc, closed.dz_pc, 1e-7, 0.0)) return false;
    if (!rel_close(oracle.dz_rp, closed.dz_rp, 1e-7, 0.0)) return false;
  }
  return true;
}

}  // namespace

TwoModeState random_irrep_state(IrrepLabel label, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector amp(label.dim());
  for (int i = 0; i < label.dim(); ++i) amp(i) = Complex(normal(rng), normal(rng));
  return TwoModeState(IrrepBasis{label}, std::move(amp));
}

Vector random_mode_amplitudes(int n_max, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector amp(n_max + 1);
  for (int i = 0; i <= n_max; ++i) amp(i) = Complex(normal(rng), normal(rng));
  amp /= amp.norm();
  return amp;
}

bool run_verification(VerifyLevel level, std::uint64_t seed, std::ostream& out) {
  const bool full = level == VerifyLevel::Full;
  std::mt19937_64 rng(seed);
  Harness h{out, seed};
  out << "verification level=" << (full ? "full" : "quick") << " prng=mt19937_64 seed=" << seed
      << "\n";

  h.check("irrep commutation and Casimir", check_irrep_algebra(full ? 40 : 12));
  h.check("Schwinger Fock/irrep consistency", check_schwinger_consistency(full ? 10 : 6));
  h.check("SU(2) invariance of N", check_n_invariance(full ? 14 : 8, rng, full ? 12 : 6));
  h.check("coherent moments vs oracle",
          check_coherent_moments(full ? std::vector<double>{0.0, 0.7, 1.5, 2.2, 3.0}
                                      : std::vector<double>{0.0, 0.7, 1.5}));
  h.check("squeezed moments vs oracle",
          check_squeezed_moments(full ? std::vector<double>{0.0, 1.0, 2.0, 3.0}
                                      : std::vector<double>{0.0, 1.0},
                                 full ? std::vector<double>{0.2, 0.6, 1.2}
                                      : std::vector<double>{0.2, 0.6}));
  h.check("twin-Fock moments vs oracle", check_twin_fock_moments(full ? 10 : 5));
  h.check("intelligent moments vs oracle",
          check_intelligent_moments(full ? std::vector<int>{1, 2, 4, 8, 12, 20}
                                        : std::vector<int>{1, 2, 4, 8}));
  h.check("intelligent spectrum", check_intelligent_spectrum(full ? 20 : 12));
  h.check("picture equivalence", check_picture_equivalence(rng, full ? 24 : 10));
  h.check("rotation composition", check_rotation_composition(rng));
  h.check("uncertainty relation on random states",
          check_uncertainty_relation(rng, full ? 64 : 24));
  h.check("coherent-form universality (vacuum port 2)", check_universality(rng, 20));

  out << (h.all_ok ? "verification OK" : "verification FAILED") << "\n";
  return h.all_ok;
}

}  // namespace gwnoise
