#include <Eigen/Dense>
#include <Eigen/SVD>

#include "dynlie/error.hpp"
#include "dynlie/linalg.hpp"

namespace dynlie {

std::vector<ComplexMatrix> nullspace(std::span<const ComplexMatrix> rows, double tolerance) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "nullspace: empty row list");
  const std::size_t n = rows.front().dim();
  const auto cols = static_cast<Eigen::Index>(n * n);

  Eigen::MatrixXcd system(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != n) {
      throw Error(ErrorCode::DimensionMismatch, "nullspace: rows of differing dimension");
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        system(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j * n + i)) = rows[r](i, j);
  }
  if (!system.allFinite()) throw Error(ErrorCode::NonFinite, "nullspace: non-finite rows");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  if (largest > 0.0) {
    while (rank < sigma.size() && sigma(rank) > tolerance * largest) ++rank;
  }

  std::vector<ComplexMatrix> kernel;
  const auto& v = svd.matrixV();
  for (Eigen::Index c = rank; c < cols; ++c) {
    ComplexMatrix k(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) k(i, j) = v(static_cast<Eigen::Index>(j * n + i), c);
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace dynlie
