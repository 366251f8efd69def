#include "discord/qmat.hpp"

#include <cmath>
#include <sstream>

namespace discord {

Mat tensor(const Mat& x, const Mat& y) {
  const int xr = static_cast<int>(x.rows()), xc = static_cast<int>(x.cols());
  const int yr = static_cast<int>(y.rows()), yc = static_cast<int>(y.cols());
  Mat out(xr * yr, xc * yc);
  for (int i = 0; i < xr; ++i)
    for (int j = 0; j < xc; ++j)
      out.block(i * yr, j * yc, yr, yc) = x(i, j) * y;
  return out;
}

Mat partial_trace(const Mat& rho, const DimPair& dims, Side keep) {
  if (dims.joint() != rho.rows() || rho.rows() != rho.cols())
    throw DimensionError("partial_trace: dims inconsistent with operator size");
  const int dA = dims.dA, dB = dims.dB;
  if (keep == Side::A) {
    Mat out = Mat::Zero(dA, dA);
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j)
        for (int k = 0; k < dB; ++k)
          out(i, j) += rho(i * dB + k, j * dB + k);
    return out;
  }
  Mat out = Mat::Zero(dB, dB);
  for (int m = 0; m < dB; ++m)
    for (int n = 0; n < dB; ++n)
      for (int k = 0; k < dA; ++k)
        out(m, n) += rho(k * dB + m, k * dB + n);
  return out;
}

namespace {

// Decompose a flat index into per-factor digits (lexicographic, first factor
// most significant).
void to_digits(int idx, const std::vector<int>& dims, std::vector<int>& out) {
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    out[f] = idx % dims[f];
    idx /= dims[f];
  }
}

int from_digits(const std::vector<int>& digits, const std::vector<int>& dims) {
  int idx = 0;
  for (size_t f = 0; f < dims.size(); ++f) idx = idx * dims[f] + digits[f];
  return idx;
}

}  // namespace

Mat partial_trace_multi(const Mat& rho, const std::vector<int>& dims,
                        const std::vector<bool>& keep) {
  int total = 1, kept = 1, traced = 1;
  for (size_t f = 0; f < dims.size(); ++f) {
    total *= dims[f];
    (keep[f] ? kept : traced) *= dims[f];
  }
  if (total != rho.rows() || rho.rows() != rho.cols())
    throw DimensionError("partial_trace_multi: dims inconsistent");

  std::vector<int> kept_dims, traced_dims;
  for (size_t f = 0; f < dims.size(); ++f)
    (keep[f] ? kept_dims : traced_dims).push_back(dims[f]);

  const int n = static_cast<int>(dims.size());
  std::vector<int> row(n), col(n), kd(kept_dims.size()), td(traced_dims.size());
  Mat out = Mat::Zero(kept, kept);
  for (int ki = 0; ki < kept; ++ki) {
    to_digits(ki, kept_dims, kd);
    for (int kj = 0; kj < kept; ++kj) {
      std::vector<int> kdj(kept_dims.size());
      to_digits(kj, kept_dims, kdj);
      Complex acc = 0.0;
      for (int t = 0; t < traced; ++t) {
        to_digits(t, traced_dims, td);
        int pk = 0, pt = 0;
        for (int f = 0; f < n; ++f) {
          if (keep[f]) {
            row[f] = kd[pk];
            col[f] = kdj[pk];
            ++pk;
          } else {
            row[f] = col[f] = td[pt];
            ++pt;
          }
        }
        acc += rho(from_digits(row, dims), from_digits(col, dims));
      }
      out(ki, kj) = acc;
    }
  }
  return out;
}

Mat permute_systems(const Mat& rho, const std::vector<int>& dims,
                    const std::vector<int>& perm) {
  int total = 1;
  for (int d : dims) total *= d;
  if (total != rho.rows() || rho.rows() != rho.cols())
    throw DimensionError("permute_systems: dims inconsistent");
  const int n = static_cast<int>(dims.size());
  std::vector<int> new_dims(n);
  for (int f = 0; f < n; ++f) new_dims[f] = dims[perm[f]];

  std::vector<int> nd_i(n), nd_j(n), od_i(n), od_j(n);
  Mat out(total, total);
  for (int i = 0; i < total; ++i) {
    to_digits(i, new_dims, nd_i);
    for (int j = 0; j < total; ++j) {
      to_digits(j, new_dims, nd_j);
      for (int f = 0; f < n; ++f) {
        od_i[perm[f]] = nd_i[f];
        od_j[perm[f]] = nd_j[f];
      }
      out(i, j) = rho(from_digits(od_i, dims), from_digits(od_j, dims));
    }
  }
  return out;
}

double hs_norm(const Mat& x) { return x.norm(); }

EigH eig_hermitian(const Mat& x) {
  const double asym = (x - x.adjoint()).norm();
  if (asym > kHermTol)
    throw InvalidStateError("eig_hermitian: operator not Hermitian, defect " +
                            std::to_string(asym));
  Eigen::SelfAdjointEigenSolver<Mat> es((x + x.adjoint()) * 0.5);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

double purity(const Mat& rho) {
  require_density(rho, "purity");
  return (rho * rho).trace().real();
}

std::string DensityCheck::describe() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "invalid density matrix:";
  if (herm_defect > kHermTol) os << " hermiticity defect " << herm_defect;
  if (trace_defect > kTraceTol) os << " trace defect " << trace_defect;
  if (pos_defect > kPosTol) os << " positivity defect " << pos_defect;
  return os.str();
}

DensityCheck validate_density(const Mat& rho) {
  DensityCheck c;
  if (rho.rows() != rho.cols()) {
    c.ok = false;
    c.herm_defect = 1.0;
    return c;
  }
  c.herm_defect = (rho - rho.adjoint()).norm();
  c.trace_defect = std::abs(rho.trace() - Complex(1.0));
  if (c.herm_defect <= kHermTol) {
    Eigen::SelfAdjointEigenSolver<Mat> es((rho + rho.adjoint()) * 0.5);
    const double lmin = es.eigenvalues().minCoeff();
    c.pos_defect = lmin < 0 ? -lmin : 0.0;
  } else {
    c.pos_defect = 0.0;
  }
  c.ok = c.herm_defect <= kHermTol && c.trace_defect <= kTraceTol &&
         c.pos_defect <= kPosTol;
  return c;
}

void require_density(const Mat& rho, const char* what) {
  const DensityCheck c = validate_density(rho);
  if (!c.ok)
    throw InvalidStateError(std::string(what) + ": " + c.describe());
}

Mat basis_projector(int d, int i) {
  Mat p = Mat::Zero(d, d);
  p(i, i) = 1.0;
  return p;
}

}  // namespace discord
