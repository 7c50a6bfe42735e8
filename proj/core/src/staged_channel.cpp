#include "tsent/staged_channel.hpp"

#include <cmath>
#include <stdexcept>

#include "tsent/entropy.hpp"

namespace tsent {

namespace {

bool is_unitary(const CMatrix& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) return false;
  CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

void StagedChannel::validate() const {
  if (da_prime < 1 || db_prime < 1) throw std::invalid_argument("staged channel: bad split dims");
  if (u_prime.rows() != dc() || u_prime.cols() != dc())
    throw std::invalid_argument("staged channel: U' must be d_C x d_C with d_C = dA' dB'");
  if (!is_unitary(u_prime)) throw std::invalid_argument("staged channel: U' not unitary");
  int dea = ancilla_a ? static_cast<int>(ancilla_a->size()) : 1;
  int deb = ancilla_b ? static_cast<int>(ancilla_b->size()) : 1;
  if (u_a) {
    if (u_a->rows() != dea * da_prime || !is_unitary(*u_a))
      throw std::invalid_argument("staged channel: U_A invalid");
  }
  if (u_b) {
    if (u_b->rows() != db_prime * deb || !is_unitary(*u_b))
      throw std::invalid_argument("staged channel: U_B invalid");
  }
  int dat = da_tilde(), dbt = db_tilde();
  int a = da > 0 ? da : dat, app = da > 0 ? da_pp : 1;
  int b = db > 0 ? db : dbt, bpp = db > 0 ? db_pp : 1;
  if (a * app != dat || b * bpp != dbt)
    throw std::invalid_argument("staged channel: output split does not factor the side dimension");
  if ((trace_a_pp && app == 0) || (trace_b_pp && bpp == 0))
    throw std::invalid_argument("staged channel: nothing to trace");
}

StagedChannel unitary_channel(CMatrix u_prime, int da_prime, int db_prime) {
  StagedChannel ch;
  ch.u_prime = std::move(u_prime);
  ch.da_prime = da_prime;
  ch.db_prime = db_prime;
  ch.validate();
  return ch;
}

StagedChannel random_staged_channel(int da_prime, int db_prime, int de_a, int de_b,
                                    int da, int db, bool trace_a, bool trace_b, Rng& rng) {
  StagedChannel ch;
  ch.da_prime = da_prime;
  ch.db_prime = db_prime;
  ch.u_prime = haar_random_unitary(da_prime * db_prime, rng);
  if (de_a > 1) {
    ch.ancilla_a = random_pure_state(de_a, rng);
    ch.u_a = haar_random_unitary(de_a * da_prime, rng);
  }
  if (de_b > 1) {
    ch.ancilla_b = random_pure_state(de_b, rng);
    ch.u_b = haar_random_unitary(db_prime * de_b, rng);
  }
  int dat = ch.da_tilde(), dbt = ch.db_tilde();
  if (da > 0) {
    if (dat % da != 0) throw std::invalid_argument("random_staged_channel: dA does not divide");
    ch.da = da;
    ch.da_pp = dat / da;
  }
  if (db > 0) {
    if (dbt % db != 0) throw std::invalid_argument("random_staged_channel: dB does not divide");
    ch.db = db;
    ch.db_pp = dbt / db;
  }
  ch.trace_a_pp = trace_a;
  ch.trace_b_pp = trace_b;
  ch.validate();
  return ch;
}

namespace {

// Pure pre-trace tau over (A, A'', B, B'', C*); factors with dim 1 kept so the
// layout is fixed.
CVector tau_vector(const StagedChannel& ch) {
  const int dc = ch.dc();
  const int dea = ch.ancilla_a ? static_cast<int>(ch.ancilla_a->size()) : 1;
  const int deb = ch.ancilla_b ? static_cast<int>(ch.ancilla_b->size()) : 1;

  // |gamma'> over A' (x) B' (x) C*
  CVector gamma = CVector::Zero(dc * dc);
  for (int i = 0; i < dc; ++i) {
    CVector ui = ch.u_prime.col(i);
    for (int j = 0; j < dc; ++j) gamma(j * dc + i) = ui(j) / std::sqrt(static_cast<double>(dc));
  }

  // assemble E_A (x) A' (x) B' (x) E_B (x) C*
  CVector phi = ch.ancilla_a ? *ch.ancilla_a : CVector::Ones(1);
  CVector psi = ch.ancilla_b ? *ch.ancilla_b : CVector::Ones(1);

  // gamma has layout (A', B', C*); build phi (x) gamma first then insert psi
  // before C* by permuting at the matrix level. Cheaper: iterate indices once.
  CVector full = CVector::Zero(dea * ch.da_prime * ch.db_prime * deb * dc);
  for (int ea = 0; ea < dea; ++ea)
    for (int ap = 0; ap < ch.da_prime; ++ap)
      for (int bp = 0; bp < ch.db_prime; ++bp)
        for (int eb = 0; eb < deb; ++eb)
          for (int cs = 0; cs < dc; ++cs) {
            int gidx = (ap * ch.db_prime + bp) * dc + cs;
            int fidx = (((ea * ch.da_prime + ap) * ch.db_prime + bp) * deb + eb) * dc + cs;
            full(fidx) = phi(ea) * gamma(gidx) * psi(eb);
          }

  // local unitaries on (E_A, A') and (B', E_B)
  CMatrix ua = ch.u_a ? *ch.u_a : CMatrix::Identity(dea * ch.da_prime, dea * ch.da_prime);
  CMatrix ub = ch.u_b ? *ch.u_b : CMatrix::Identity(ch.db_prime * deb, ch.db_prime * deb);
  CMatrix op = kron(kron(ua, ub), CMatrix::Identity(dc, dc));
  return op * full;
}

}  // namespace

DensityOperator tau_state(const StagedChannel& ch) {
  ch.validate();
  CVector v = tau_vector(ch);
  const int dc = ch.dc();
  int a = ch.da > 0 ? ch.da : ch.da_tilde();
  int app = ch.da > 0 ? ch.da_pp : 1;
  int b = ch.db > 0 ? ch.db : ch.db_tilde();
  int bpp = ch.db > 0 ? ch.db_pp : 1;

  CMatrix rho = v * v.adjoint();
  std::vector<int> dims{a, app, b, bpp, dc};
  std::vector<int> keep;
  std::vector<int> kept_dims;
  keep.push_back(0);
  kept_dims.push_back(a);
  if (!ch.trace_a_pp && app > 1) {
    keep.push_back(1);
    kept_dims.back() = a * app;  // fold A'' into the A factor
  }
  keep.push_back(2);
  kept_dims.push_back(b);
  if (!ch.trace_b_pp && bpp > 1) {
    keep.push_back(3);
    kept_dims.back() = b * bpp;
  }
  keep.push_back(4);
  kept_dims.push_back(dc);
  return DensityOperator(partial_trace(rho, dims, keep), kept_dims);
}

ChoiState choi_state(const StagedChannel& ch) {
  DensityOperator tau = tau_state(ch);
  ChoiState out;
  out.input_dim = ch.dc();
  out.dims = tau.dims();
  out.op = tau.matrix() * static_cast<double>(ch.dc());
  // trace preservation: tracing outputs must give the identity on C*
  std::vector<int> cstar{static_cast<int>(out.dims.size()) - 1};
  CMatrix red = partial_trace(out.op, out.dims, cstar);
  out.trace_preservation_defect =
      (red - CMatrix::Identity(out.input_dim, out.input_dim)).cwiseAbs().maxCoeff();
  return out;
}

StageCheck verify_stage1(const CMatrix& u_prime, int da_prime, int db_prime, double q) {
  auto ch = unitary_channel(u_prime, da_prime, db_prime);
  DensityOperator tau = tau_state(ch);  // dims (A', B', C*)
  StageCheck out;
  out.cmi = quantum_cmi(tau, {0}, {1}, {2}, q);
  out.bound = bound_f(q, da_prime, db_prime);
  out.deviation = std::abs(out.cmi - out.bound);
  return out;
}

StageCheck verify_stage2(const StagedChannel& ch, double q) {
  if (ch.trace_a_pp || ch.trace_b_pp)
    throw std::invalid_argument("verify_stage2: no subsystem may be traced");
  DensityOperator tau = tau_state(ch);  // (Ã, B̃, C*)
  StageCheck out;
  out.cmi = quantum_cmi(tau, {0}, {1}, {2}, q);
  out.bound = bound_f(q, ch.da_prime, ch.db_prime);
  out.deviation = std::abs(out.cmi - out.bound);
  return out;
}

OneSidedCheck verify_stage3_onesided(const StagedChannel& ch, double q) {
  if (q < 1.0) throw std::domain_error("verify_stage3_onesided: q >= 1 required");
  if (ch.trace_a_pp || !ch.trace_b_pp)
    throw std::invalid_argument("verify_stage3_onesided: exactly B'' must be traced");
  DensityOperator tau = tau_state(ch);  // (AA'', B, C*)
  OneSidedCheck out;
  out.cmi = quantum_cmi(tau, {0}, {1}, {2}, q);
  out.bound = bound_f(q, ch.da_prime, ch.db_prime);
  out.margin = out.bound - out.cmi;
  return out;
}

ConjectureReport search_conjecture_counterexamples(Conjecture which, int max_factor_dim,
                                                   const std::vector<double>& q_values,
                                                   size_t samples, std::uint64_t seed,
                                                   double tol) {
  for (double q : q_values)
    if (q < 1.0) throw std::domain_error("conjecture search: q >= 1 required");
  ConjectureReport rep;
  rep.which = which;
  Rng rng(seed);
  std::uniform_int_distribution<int> dimpick(2, max_factor_dim);

  for (size_t s = 0; s < samples; ++s) {
    // redraw until the total Hilbert dimension stays workable (<= 256)
    int dap, dbp, dea, deb;
    do {
      dap = dimpick(rng);
      dbp = dimpick(rng);
      dea = dimpick(rng);
      deb = dimpick(rng);
    } while (dea * dap * dbp * deb * dap * dbp > 256);
    // split each side so that a non-trivial factor is traced when possible
    auto split = [&](int total) {
      for (int d = 2; d * d <= total; ++d)
        if (total % d == 0) return d;
      return total;  // prime side dimension: nothing to trace off
    };
    int dat = dea * dap, dbt = dbp * deb;
    int da = split(dat), db = split(dbt);
    auto ch = random_staged_channel(dap, dbp, dea, deb, da, db, true, true, rng);
    DensityOperator tau = tau_state(ch);  // (A, B, C*)
    for (double q : q_values) {
      ConjectureSample smp;
      smp.q = q;
      smp.cmi = quantum_cmi(tau, {0}, {1}, {2}, q);
      smp.bound = which == Conjecture::BoundByPrimeDims ? bound_f(q, dap, dbp)
                                                        : bound_f(q, da, db);
      smp.margin = smp.cmi - smp.bound;
      if (smp.margin > rep.max_margin) {
        rep.max_margin = smp.margin;
        rep.worst = smp;
        rep.worst_channel = ch;
      }
      if (smp.margin > tol) rep.counterexamples.push_back(smp);
      ++rep.samples;
    }
  }
  return rep;
}

CqCheck verify_cq_theorem(const std::vector<double>& p_c, const std::vector<CMatrix>& rho_a,
                          const std::vector<CMatrix>& rho_b, double q) {
  if (q < 1.0) throw std::domain_error("verify_cq_theorem: q >= 1 required");
  if (p_c.size() != rho_a.size() || p_c.size() != rho_b.size() || p_c.empty())
    throw std::invalid_argument("verify_cq_theorem: size mismatch");
  const int da = static_cast<int>(rho_a[0].rows());
  const int db = static_cast<int>(rho_b[0].rows());
  const int nc = static_cast<int>(p_c.size());

  CMatrix rho = CMatrix::Zero(da * db * nc, da * db * nc);
  for (int c = 0; c < nc; ++c) {
    CMatrix ec = CMatrix::Zero(nc, nc);
    ec(c, c) = 1.0;
    rho += p_c[static_cast<size_t>(c)] * kron(kron(rho_a[static_cast<size_t>(c)], rho_b[static_cast<size_t>(c)]), ec);
  }
  DensityOperator full(rho, {da, db, nc});

  CqCheck out;
  out.cmi = quantum_cmi(full, {0}, {1}, {2}, q);
  out.bound = bound_f(q, da, db);
  out.margin = out.bound - out.cmi;

  // Lemma 1 identity on the (A, C) part: S_q(AC) = sum p^q S_q(rho_A^c) + S_q(C)
  double s_ac = quantum_tsallis(partial_trace(rho, {da, db, nc}, {0, 2}), q);
  double rhs = 0.0;
  bool shannon = std::abs(q - 1.0) < 1e-9;
  double s_c = 0.0;
  for (int c = 0; c < nc; ++c) {
    double p = p_c[static_cast<size_t>(c)];
    if (p <= 0) continue;
    rhs += std::pow(p, q) * quantum_tsallis(rho_a[static_cast<size_t>(c)], q);
    s_c += shannon ? -p * std::log(p) : std::pow(p, q);
  }
  s_c = shannon ? s_c : (1.0 - s_c) / (q - 1.0);
  out.lemma1_deviation = std::abs(s_ac - rhs - s_c);

  // saturation: deterministic c and both conditionals maximally mixed
  int support = 0, last = -1;
  for (int c = 0; c < nc; ++c)
    if (p_c[static_cast<size_t>(c)] > 1e-12) {
      ++support;
      last = c;
    }
  if (support == 1) {
    auto mm_dev = [](const CMatrix& r) {
      int d = static_cast<int>(r.rows());
      return (r - CMatrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff();
    };
    out.saturated = mm_dev(rho_a[static_cast<size_t>(last)]) < 1e-9 &&
                    mm_dev(rho_b[static_cast<size_t>(last)]) < 1e-9;
  }
  return out;
}

SigmaCheck verify_sigma_lemma(const CMatrix& sigma_c, const StagedChannel& ch, double q) {
  DensityOperator tau = tau_state(ch);  // (Aside, Bside, C*)
  const auto& tdims = tau.dims();
  if (tdims.size() != 3)
    throw std::invalid_argument("verify_sigma_lemma: channel must yield a tripartite tau");
  const int dsig = static_cast<int>(sigma_c.rows());

  // sigma_C (x) tau, reordered to (A, B, C, C*)
  CMatrix big = kron(sigma_c, tau.matrix());
  std::vector<int> dims{dsig, tdims[0], tdims[1], tdims[2]};
  CMatrix perm = permute_subsystems(big, dims, {1, 2, 0, 3});
  DensityOperator sig(perm, {tdims[0], tdims[1], dsig, tdims[2]});

  SigmaCheck out;
  out.lhs = quantum_cmi(sig, {0}, {1}, {2, 3}, q);
  out.cmi_tau = quantum_cmi(tau, {0}, {1}, {2}, q);
  double tr_q = 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sigma_c, Eigen::EigenvaluesOnly);
  bool shannon = std::abs(q - 1.0) < 1e-9;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double p = es.eigenvalues()(i);
    if (p > 1e-14) tr_q += shannon ? p : std::pow(p, q);
  }
  out.rhs = tr_q * out.cmi_tau;
  out.identity_dev = std::abs(out.lhs - out.rhs);
  out.monotone_ok = out.lhs <= out.cmi_tau + 1e-9;
  return out;
}

}  // namespace tsent
