#include "tsent/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tsent {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {

int total_dim(const std::vector<int>& dims) {
  int d = 1;
  for (int x : dims) {
    if (x < 1) throw std::invalid_argument("factor dimensions must be >= 1");
    d *= x;
  }
  return d;
}

// multi-index helpers over row-major factor layout
void unpack(int index, const std::vector<int>& dims, std::vector<int>& out) {
  for (size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
}

int pack(const std::vector<int>& idx, const std::vector<int>& dims) {
  int v = 0;
  for (size_t k = 0; k < dims.size(); ++k) v = v * dims[k] + idx[k];
  return v;
}

}  // namespace

CMatrix permute_subsystems(const CMatrix& m, const std::vector<int>& dims,
                           const std::vector<int>& perm) {
  const int d = total_dim(dims);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("permute_subsystems: size mismatch");
  if (perm.size() != dims.size())
    throw std::invalid_argument("permute_subsystems: bad permutation");
  std::vector<int> new_dims(dims.size());
  for (size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims[static_cast<size_t>(perm[k])];

  std::vector<int> map(static_cast<size_t>(d));
  std::vector<int> idx(dims.size()), nidx(dims.size());
  for (int i = 0; i < d; ++i) {
    unpack(i, dims, idx);
    for (size_t k = 0; k < perm.size(); ++k) nidx[k] = idx[static_cast<size_t>(perm[k])];
    map[static_cast<size_t>(i)] = pack(nidx, new_dims);
  }
  CMatrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) = m(i, j);
  return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& keep) {
  const int d = total_dim(dims);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("partial_trace: size mismatch");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep must be non-empty");
  for (int k : keep)
    if (k < 0 || static_cast<size_t>(k) >= dims.size())
      throw std::invalid_argument("partial_trace: bad factor index");

  std::vector<int> traced;
  for (size_t k = 0; k < dims.size(); ++k)
    if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end())
      traced.push_back(static_cast<int>(k));

  int dk = 1, dt = 1;
  for (int k : keep) dk *= dims[static_cast<size_t>(k)];
  for (int k : traced) dt *= dims[static_cast<size_t>(k)];

  std::vector<int> kdims, tdims;
  for (int k : keep) kdims.push_back(dims[static_cast<size_t>(k)]);
  for (int k : traced) tdims.push_back(dims[static_cast<size_t>(k)]);

  CMatrix out = CMatrix::Zero(dk, dk);
  std::vector<int> full(dims.size());
  std::vector<int> ki(kdims.size()), kj(kdims.size()), ti(std::max<size_t>(tdims.size(), 1));

  for (int a = 0; a < dk; ++a) {
    unpack(a, kdims, ki);
    for (int b = 0; b < dk; ++b) {
      unpack(b, kdims, kj);
      Complex sum = 0;
      for (int t = 0; t < dt; ++t) {
        if (!tdims.empty()) unpack(t, tdims, ti);
        for (size_t k = 0; k < keep.size(); ++k) full[static_cast<size_t>(keep[k])] = ki[k];
        for (size_t k = 0; k < traced.size(); ++k) full[static_cast<size_t>(traced[k])] = ti[k];
        int row = pack(full, dims);
        for (size_t k = 0; k < keep.size(); ++k) full[static_cast<size_t>(keep[k])] = kj[k];
        int col = pack(full, dims);
        sum += m(row, col);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

DensityOperator::DensityOperator(CMatrix m, std::vector<int> dims)
    : mat_(std::move(m)), dims_(std::move(dims)) {
  if (mat_.rows() != mat_.cols()) throw std::invalid_argument("density operator must be square");
  if (total_dim(dims_) != mat_.rows())
    throw std::invalid_argument("dims do not multiply to the matrix size");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("density operator is not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > kHermTol || std::abs(mat_.trace().imag()) > kHermTol)
    throw std::invalid_argument("density operator must have trace 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigFloor)
    throw std::invalid_argument("density operator has a negative eigenvalue");
}

DensityOperator DensityOperator::partial(const std::vector<int>& keep) const {
  std::vector<int> kdims;
  for (int k : keep) kdims.push_back(dims_[static_cast<size_t>(k)]);
  return DensityOperator(partial_trace(mat_, dims_, keep), std::move(kdims));
}

std::vector<double> DensityOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(mat_, Eigen::EigenvaluesOnly);
  std::vector<double> w(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  for (double& x : w) {
    if (x < 0.0) x = 0.0;  // eigensolver noise, already validated above
  }
  return w;
}

double quantum_tsallis(const CMatrix& rho, double q) {
  if (q <= 0.0) throw std::domain_error("quantum_tsallis: q must be positive");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  bool shannon = std::abs(q - 1.0) < 1e-9;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double p = es.eigenvalues()(i);
    if (p <= 1e-14) continue;
    s += shannon ? -p * std::log(p) : std::pow(p, q);
  }
  return shannon ? s : (1.0 - s) / (q - 1.0);
}

double quantum_tsallis(const DensityOperator& rho, double q) {
  return quantum_tsallis(rho.matrix(), q);
}

double quantum_cmi(const DensityOperator& rho, const std::vector<int>& a,
                   const std::vector<int>& b, const std::vector<int>& c, double q) {
  std::vector<int> seen;
  for (const auto* grp : {&a, &b, &c})
    for (int k : *grp) {
      if (std::find(seen.begin(), seen.end(), k) != seen.end())
        throw std::invalid_argument("quantum_cmi: overlapping groups");
      seen.push_back(k);
    }
  auto join = [](std::vector<int> u, const std::vector<int>& v) {
    u.insert(u.end(), v.begin(), v.end());
    std::sort(u.begin(), u.end());
    return u;
  };
  auto S = [&](const std::vector<int>& grp) {
    return quantum_tsallis(partial_trace(rho.matrix(), rho.dims(), grp), q);
  };
  auto ac = join(a, c), bc = join(b, c), abc = join(join(a, b), c);
  double s_c = c.empty() ? 0.0 : S(c);
  return S(ac) + S(bc) - s_c - S(abc);
}

CMatrix haar_random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix qm = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // phase correction makes the distribution Haar rather than QR-biased
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    qm.col(j) *= d / std::abs(d);
  }
  return qm;
}

CVector random_pure_state(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  v.normalize();
  return v;
}

CMatrix random_mixed_state(int dim, int rank, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMatrix m = a * a.adjoint();
  return m / m.trace().real();
}

std::vector<CMatrix> random_povm(int dim, int outcomes, Rng& rng) {
  if (dim < 1 || outcomes < 1) throw std::invalid_argument("random_povm: bad sizes");
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<CMatrix> gs;
  CMatrix total = CMatrix::Zero(dim, dim);
  for (int k = 0; k < outcomes; ++k) {
    CMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    CMatrix gk = a * a.adjoint();
    total += gk;
    gs.push_back(std::move(gk));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(total);
  CMatrix inv_sqrt = es.operatorInverseSqrt();
  for (auto& gk : gs) gk = inv_sqrt * gk * inv_sqrt;
  return gs;
}

std::vector<CMatrix> projective_povm(int dim, Rng& rng) {
  CMatrix u = haar_random_unitary(dim, rng);
  std::vector<CMatrix> out;
  for (int k = 0; k < dim; ++k) out.push_back(u.col(k) * u.col(k).adjoint());
  return out;
}

}  // namespace tsent
