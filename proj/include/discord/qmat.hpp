#ifndef DISCORD_QMAT_HPP
#define DISCORD_QMAT_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace discord {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Global numerical tolerances.
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPosTol = 1e-10;
constexpr double kEigClamp = 1e-12;

struct DimPair {
  int dA = 1;
  int dB = 1;
  int joint() const { return dA * dB; }
};

enum class Side { A, B };

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Kronecker product with lexicographic basis ordering (index = iA*dB + iB).
Mat tensor(const Mat& x, const Mat& y);

// Reduced operator on the kept subsystem of a bipartite operator.
Mat partial_trace(const Mat& rho, const DimPair& dims, Side keep);

// Multi-factor partial trace: keep[i] marks which tensor factors survive.
Mat partial_trace_multi(const Mat& rho, const std::vector<int>& dims,
                        const std::vector<bool>& keep);

// Reorder tensor factors: new factor j is old factor perm[j].
Mat permute_systems(const Mat& rho, const std::vector<int>& dims,
                    const std::vector<int>& perm);

// sqrt(Tr(X^dag X)), the Frobenius/Hilbert-Schmidt norm.
double hs_norm(const Mat& x);

struct EigH {
  RVec values;   // ascending
  Mat vectors;   // orthonormal columns, same order
};

// Hermitian eigendecomposition. Throws if asymmetry exceeds kHermTol.
EigH eig_hermitian(const Mat& x);

// Tr(rho^2). Validates the state first.
double purity(const Mat& rho);

struct DensityCheck {
  bool ok = true;
  double herm_defect = 0.0;   // ||rho - rho^dag||_2
  double trace_defect = 0.0;  // |Tr rho - 1|
  double pos_defect = 0.0;    // max(0, -min eigenvalue)
  std::string describe() const;
};

DensityCheck validate_density(const Mat& rho);

// Throws InvalidStateError when the check fails.
void require_density(const Mat& rho, const char* what = "state");

inline Mat identity(int d) { return Mat::Identity(d, d); }

// |i><j| on a d-dimensional space.
Mat basis_projector(int d, int i);

}  // namespace discord

#endif
