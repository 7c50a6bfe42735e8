#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace tsent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

// Reorders tensor factors of an operator: perm[k] = old index of the factor
// placed at position k.
CMatrix permute_subsystems(const CMatrix& m, const std::vector<int>& dims,
                           const std::vector<int>& perm);

// Traces out every factor not in `keep` (keep lists factor indices, ascending
// output order follows `keep`).
CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& keep);

// Hermitian PSD trace-one operator with a tensor-factor signature.
class DensityOperator {
 public:
  static constexpr double kHermTol = 1e-10;
  static constexpr double kEigFloor = -1e-10;

  DensityOperator(CMatrix m, std::vector<int> dims);

  const CMatrix& matrix() const { return mat_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  DensityOperator partial(const std::vector<int>& keep) const;
  std::vector<double> eigenvalues() const;  // ascending, clipped at 0

 private:
  CMatrix mat_;
  std::vector<int> dims_;
};

// Quantum Tsallis entropy from eigenvalues; von Neumann in nats at q = 1.
double quantum_tsallis(const DensityOperator& rho, double q);
double quantum_tsallis(const CMatrix& rho, double q);

// I_q(A:B|C) = S(AC) + S(BC) - S(C) - S(ABC); groups are factor-index lists,
// C may be empty (plain mutual information).
double quantum_cmi(const DensityOperator& rho, const std::vector<int>& a,
                   const std::vector<int>& b, const std::vector<int>& c, double q);

using Rng = std::mt19937_64;

// QR of a complex Gaussian matrix with phase correction.
CMatrix haar_random_unitary(int dim, Rng& rng);
CVector random_pure_state(int dim, Rng& rng);
// Random mixed state of the given rank (Wishart construction).
CMatrix random_mixed_state(int dim, int rank, Rng& rng);
// PSD elements summing to the identity: G_k = A_k A_k^*, E_k = S^-1/2 G_k S^-1/2.
std::vector<CMatrix> random_povm(int dim, int outcomes, Rng& rng);
// Rank-1 projective measurement from a Haar unitary's columns.
std::vector<CMatrix> projective_povm(int dim, Rng& rng);

}  // namespace tsent
