#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsent/quantum.hpp"

namespace tsent {

// Channel from C to two parties, decomposed as a joint unitary U' : C -> A'B',
// then optional local unitaries with pure ancillas (stage II), then optional
// partial traces of local factors (stage III):
//   A-side: U_A : E_A (x) A' -> A (x) A''   (A'' may be traced)
//   B-side: U_B : B' (x) E_B -> B (x) B''   (B'' may be traced)
struct StagedChannel {
  CMatrix u_prime;  // d_C x d_C, output read as A' (x) B'
  int da_prime = 0, db_prime = 0;

  std::optional<CVector> ancilla_a;  // |phi>_{E_A}
  std::optional<CVector> ancilla_b;  // |psi>_{E_B}
  std::optional<CMatrix> u_a;        // on E_A (x) A'
  std::optional<CMatrix> u_b;        // on B' (x) E_B

  // output splits; defaults mean "no split" (A = whole side)
  int da = 0, da_pp = 1, db = 0, db_pp = 1;
  bool trace_a_pp = false, trace_b_pp = false;

  int dc() const { return da_prime * db_prime; }
  int da_tilde() const { return (ancilla_a ? static_cast<int>(ancilla_a->size()) : 1) * da_prime; }
  int db_tilde() const { return db_prime * (ancilla_b ? static_cast<int>(ancilla_b->size()) : 1); }

  void validate() const;
};

StagedChannel unitary_channel(CMatrix u_prime, int da_prime, int db_prime);
StagedChannel random_staged_channel(int da_prime, int db_prime, int de_a, int de_b,
                                    int da, int db, bool trace_a, bool trace_b, Rng& rng);

// tau = (1/d_C) x Choi state, over (A-side, B-side, C*) with any requested
// traces applied. Before tracing the state is pure.
DensityOperator tau_state(const StagedChannel& ch);

struct ChoiState {
  CMatrix op;  // on outputs (x) C*
  std::vector<int> dims;
  int input_dim = 0;
  double trace_preservation_defect = 0.0;  // |Tr_out(choi) - I| max norm
};
ChoiState choi_state(const StagedChannel& ch);

struct StageCheck {
  double cmi = 0.0;
  double bound = 0.0;  // f(q, d_A', d_B')
  double deviation = 0.0;
};

// Stage I: unitary channel, I_q(A':B'|C*) must equal f(q,dA',dB').
StageCheck verify_stage1(const CMatrix& u_prime, int da_prime, int db_prime, double q);
// Stage II: local isometries leave the CMI unchanged.
StageCheck verify_stage2(const StagedChannel& ch, double q);

struct OneSidedCheck {
  double cmi = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - cmi, >= 0 expected for q >= 1
};
// Stage III with only B'' traced: I_q(AA'':B|C*) <= f(q,dA',dB').
OneSidedCheck verify_stage3_onesided(const StagedChannel& ch, double q);

enum class Conjecture { BoundByPrimeDims, BoundByOutputDims };

struct ConjectureSample {
  double q = 0.0;
  double cmi = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // cmi - bound; positive = counterexample
};

struct ConjectureReport {
  Conjecture which = Conjecture::BoundByPrimeDims;
  size_t samples = 0;
  double max_margin = -1e300;
  ConjectureSample worst;
  std::vector<ConjectureSample> counterexamples;  // margin > tol
  std::optional<StagedChannel> worst_channel;
};

ConjectureReport search_conjecture_counterexamples(Conjecture which, int max_factor_dim,
                                                   const std::vector<double>& q_values,
                                                   size_t samples, std::uint64_t seed,
                                                   double tol = 1e-9);

struct CqCheck {
  double cmi = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool saturated = false;
  double lemma1_deviation = 0.0;  // |S_q(AZ) - sum p^q S_q(rho_A^z) - S_q(Z)|
};

// Theorem-4 style classical-quantum states: rho = sum_c p_c rhoA_c (x) rhoB_c (x) |c><c|.
CqCheck verify_cq_theorem(const std::vector<double>& p_c, const std::vector<CMatrix>& rho_a,
                          const std::vector<CMatrix>& rho_b, double q);

struct SigmaCheck {
  double lhs = 0.0;          // I_q(A:B|CC*) on sigma_C (x) tau
  double rhs = 0.0;          // Tr(sigma_C^q) * I_q(A:B|C*)_tau
  double identity_dev = 0.0;
  double cmi_tau = 0.0;
  bool monotone_ok = false;  // lhs <= cmi_tau (+tol)
};
SigmaCheck verify_sigma_lemma(const CMatrix& sigma_c, const StagedChannel& ch, double q);

}  // namespace tsent
