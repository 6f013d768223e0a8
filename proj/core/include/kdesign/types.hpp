#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace kdesign {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

using Seed = std::uint64_t;

}  // namespace kdesign
