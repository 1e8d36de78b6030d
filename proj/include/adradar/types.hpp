#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace adradar {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using IVec = Eigen::VectorXi;
using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

// 60 GHz single-carrier/control PHY constants. The chip rate is common to
// both frame formats; everything downstream is derived from these.
inline constexpr double speed_of_light_mps = 3.0e8;
inline constexpr double chip_rate_hz = 1.76e9;
inline constexpr double chip_period_s = 1.0 / chip_rate_hz;
inline constexpr double carrier_hz = 60.0e9;
inline constexpr double wavelength_m = speed_of_light_mps / carrier_hz;

inline constexpr double pi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace adradar
