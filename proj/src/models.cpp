#include "drabi/models.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace drabi {

namespace {

constexpr char kDumpMagic[6] = {'D', 'R', 'A', 'B', 'I', '1'};
constexpr double kClusterGap = 1e-9;
constexpr double kMixedTol = 1e-6;

void require_gamma(double gamma) {
  if (!(gamma > 0)) throw Error("gamma must be positive");
}

}  // namespace

DerivedGrm derive_grm(const GrmParams& p) {
  require_gamma(p.gamma);
  const double prod = p.k1 * p.k2;
  if (prod < 0)
    throw Error("couplings k1, k2 must have equal signs (k1*k2 >= 0)");
  if (prod == 0)
    throw JcmBoundary(
        "k1*k2 = 0: reduced-operator parameters are undefined on the "
        "decoupled boundary");
  DerivedGrm d;
  d.delta = p.mu / p.gamma;
  d.lambda_plus = (p.k1 * p.k1 + p.k2 * p.k2) / (2.0 * p.gamma * p.gamma);
  d.lambda_minus = (p.k1 * p.k1 - p.k2 * p.k2) / (2.0 * p.gamma * p.gamma);
  d.kappa = std::sqrt(prod) / p.gamma;
  d.w = std::pow(p.k2 / p.k1, 0.25);
  return d;
}

double su11_constant(Su11Model model) {
  return model == Su11Model::two_photon ? 0.25 : 0.5;
}

void validate_su11(const Su11Params& p) {
  require_gamma(p.gamma);
  if (p.model == Su11Model::two_photon) {
    if (p.q != 0.25 && p.q != 0.75)
      throw Error(
          "two_photon representation label must be 1/4 (even sector) or 3/4 "
          "(odd sector)");
  } else {
    const double two_q = 2.0 * p.q;
    if (!(two_q > 0) || two_q != std::floor(two_q))
      throw Error("two_mode representation label must have 2q a positive "
                  "integer");
  }
}

bool collapse_risk(const Su11Params& p) {
  return p.model == Su11Model::two_photon && p.gamma <= 2.0;
}

TruncatedHamiltonian build_grm_full(const GrmParams& p, int n_max) {
  require_gamma(p.gamma);
  if (n_max < 0) throw Error("n_max must be nonnegative");
  const int dim = 2 * (n_max + 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n <= n_max; ++n) {
    h(2 * n, 2 * n) = p.gamma * n + p.mu;
    h(2 * n + 1, 2 * n + 1) = p.gamma * n - p.mu;
    if (n < n_max) {
      const double root = std::sqrt(n + 1.0);
      // a^dag sigma_-: |n,up> -> |n+1,down>
      h(2 * (n + 1) + 1, 2 * n) = p.k1 * root;
      h(2 * n, 2 * (n + 1) + 1) = p.k1 * root;
      // a^dag sigma_+: |n,down> -> |n+1,up>
      h(2 * (n + 1), 2 * n + 1) = p.k2 * root;
      h(2 * n + 1, 2 * (n + 1)) = p.k2 * root;
    }
  }
  TruncatedHamiltonian t;
  t.matrix = std::move(h);
  t.n_max = n_max;
  t.basis = "fock-spin-interleaved";
  return t;
}

TruncatedHamiltonian build_grm_fg_full(const GrmParams& p, int n_max) {
  const DerivedGrm d = derive_grm(p);
  if (n_max < 0) throw Error("n_max must be nonnegative");
  const int sz = n_max + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * sz, 2 * sz);
  // Blocks (units of gamma):
  //   top-left      a^dag a + kappa a + (lambda_plus/kappa) a^dag
  //   top-right     delta + (lambda_minus/kappa) a^dag
  //   bottom-left   delta - (lambda_minus/kappa) a^dag
  //   bottom-right  a^dag a - kappa a - (lambda_plus/kappa) a^dag
  for (int n = 0; n < sz; ++n) {
    h(n, n) = n;
    h(sz + n, sz + n) = n;
    h(n, sz + n) = d.delta;
    h(sz + n, n) = d.delta;
    if (n < n_max) {
      const double root = std::sqrt(n + 1.0);
      h(n, n + 1) += d.kappa * root;                       // kappa a
      h(n + 1, n) += d.lambda_plus / d.kappa * root;       // (l+/k) a^dag
      h(sz + n, sz + n + 1) -= d.kappa * root;
      h(sz + n + 1, sz + n) -= d.lambda_plus / d.kappa * root;
      h(n + 1, sz + n) += d.lambda_minus / d.kappa * root;
      h(sz + n + 1, n) -= d.lambda_minus / d.kappa * root;
    }
  }
  TruncatedHamiltonian t;
  t.matrix = std::move(h);
  t.n_max = n_max;
  t.basis = "spin-blocked";
  return t;
}

TruncatedHamiltonian build_su11_full(const Su11Params& p, int n_max) {
  validate_su11(p);
  if (n_max < 0) throw Error("n_max must be nonnegative");
  const int sz = n_max + 1;
  const double c = su11_constant(p.model);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * sz, 2 * sz);
  for (int m = 0; m < sz; ++m) {
    const double diag = p.gamma * (m + p.q - c);
    h(m, m) = diag;
    h(sz + m, sz + m) = diag;
    h(m, sz + m) = p.delta;  // delta sigma_1
    h(sz + m, m) = p.delta;
    if (m < n_max) {
      const double ladder = std::sqrt((m + 1.0) * (m + 2.0 * p.q));
      h(m, m + 1) = ladder;  // sigma_3 (Kp + Km): + on the first block
      h(m + 1, m) = ladder;
      h(sz + m, sz + m + 1) = -ladder;
      h(sz + m + 1, sz + m) = -ladder;
    }
  }
  TruncatedHamiltonian t;
  t.matrix = std::move(h);
  t.n_max = n_max;
  t.basis = "spin-blocked";
  if (collapse_risk(p))
    t.note =
        "two_photon with gamma <= 2: the discrete spectrum collapses and "
        "truncated eigenvalues will not converge";
  return t;
}

namespace {

// Shared implementation over real or complex eigenvector columns.
template <typename MatrixType>
ParityAssignment assign_parity_impl(MatrixType& vectors,
                                    const Eigen::VectorXd& values, int n_max) {
  using Scalar = typename MatrixType::Scalar;
  const int dim = 2 * (n_max + 1);
  if (vectors.rows() != dim)
    throw Error("eigenvector dimension does not match the interleaved basis");
  const int count = static_cast<int>(vectors.cols());
  if (values.size() != count)
    throw Error("eigenvalue/eigenvector count mismatch");

  Eigen::VectorXd parity(dim);
  for (int n = 0; n <= n_max; ++n) {
    const double boson = (n % 2 == 0) ? 1.0 : -1.0;
    parity(2 * n) = boson;       // spin up
    parity(2 * n + 1) = -boson;  // spin down
  }

  auto expectation = [&](int col) {
    std::complex<double> e = 0.0;
    for (int r = 0; r < dim; ++r) {
      const std::complex<double> v = vectors(r, col);
      e += std::conj(v) * parity(r) * v;
    }
    return e.real();
  };

  // Rotate each degenerate cluster so members diagonalize the parity
  // operator restricted to the cluster.
  int start = 0;
  while (start < count) {
    int end = start + 1;
    while (end < count && values(end) - values(end - 1) < kClusterGap) ++end;
    const int k = end - start;
    if (k > 1) {
      using Block = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
      Block block = vectors.middleCols(start, k);
      Block scaled = block;
      for (int r = 0; r < dim; ++r) scaled.row(r) *= parity(r);
      Block small = block.adjoint() * scaled;
      Eigen::SelfAdjointEigenSolver<Block> es(small);
      vectors.middleCols(start, k) = block * es.eigenvectors();
    }
    start = end;
  }

  ParityAssignment out;
  out.sign.resize(count);
  out.mixed.resize(count);
  for (int c = 0; c < count; ++c) {
    const double e = expectation(c);
    out.sign[c] = e >= 0 ? +1 : -1;
    out.mixed[c] = std::abs(std::abs(e) - 1.0) > kMixedTol;
  }
  return out;
}

}  // namespace

ParityAssignment assign_parity(Eigen::MatrixXd& vectors,
                               const Eigen::VectorXd& values, int n_max) {
  return assign_parity_impl(vectors, values, n_max);
}

ParityAssignment assign_parity(Eigen::MatrixXcd& vectors,
                               const Eigen::VectorXd& values, int n_max) {
  return assign_parity_impl(vectors, values, n_max);
}

namespace {

template <typename T>
void write_pod(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw Error("truncated snapshot file");
  return v;
}

void write_string(std::ofstream& os, const std::string& s) {
  write_pod(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::ifstream& is) {
  const auto len = read_pod<std::uint32_t>(is);
  if (len > (1u << 20)) throw Error("snapshot string field too long");
  std::string s(len, '\0');
  is.read(s.data(), len);
  if (!is) throw Error("truncated snapshot file");
  return s;
}

}  // namespace

void dump_hamiltonian(const TruncatedHamiltonian& h, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("cannot open snapshot file for writing: " + path);
  os.write(kDumpMagic, sizeof(kDumpMagic));
  write_pod(os, static_cast<std::int32_t>(h.n_max));
  write_string(os, h.basis);
  write_string(os, h.note);
  write_pod(os, static_cast<std::uint32_t>(h.matrix.rows()));
  write_pod(os, static_cast<std::uint32_t>(h.matrix.cols()));
  for (Eigen::Index r = 0; r < h.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < h.matrix.cols(); ++c)
      write_pod(os, h.matrix(r, c));
  if (!os) throw Error("failed writing snapshot file: " + path);
}

TruncatedHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open snapshot file: " + path);
  char magic[sizeof(kDumpMagic)];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kDumpMagic, sizeof(magic)) != 0)
    throw Error("not a Hamiltonian snapshot (bad magic): " + path);
  TruncatedHamiltonian h;
  h.n_max = read_pod<std::int32_t>(is);
  h.basis = read_string(is);
  h.note = read_string(is);
  const auto rows = read_pod<std::uint32_t>(is);
  const auto cols = read_pod<std::uint32_t>(is);
  if (rows > (1u << 16) || cols > (1u << 16))
    throw Error("snapshot dimensions out of range");
  h.matrix.resize(rows, cols);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      h.matrix(r, c) = read_pod<double>(is);
  return h;
}

}  // namespace drabi
