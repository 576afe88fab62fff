#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "s3modes/bases.hpp"
#include "s3modes/rotation.hpp"

namespace s3modes {

/// The transported auxiliary scalars of a rotation for one (I, J):
/// A = <L alpha R . n_IJ>, A' = <L alpha-bar R . n_IJ>, B = <L beta R . n_IJ>,
/// D = <L delta R . n_IJ>, U = B/A', V = A/B.
struct RotationScalars {
    std::complex<double> A, A_prime, B, D;
    std::complex<double> U, V;
    /// True when min(|A'|, |B|) < threshold * max(|A|, |A'|, |B|, |D|); U and
    /// V are then left at zero.
    bool degenerate = false;
};

inline constexpr double kDegeneracyThreshold = 1e-8;

RotationScalars rotation_scalars(const Rotation& g, int k, int I, int J,
                                 double threshold = kDegeneracyThreshold);

/// Matrix of the function rotation R_g f(x) = f(g x) on B3:
///   R_g Phi_IJ = sum_ij matrix(IJ, ij) Phi_ij,
/// rows and columns in b3_index order.
///
/// With this row convention matrix(g) * matrix(h) = matrix(compose(g, h)).
/// operator_matrix() = matrix^T acts on coefficient column vectors, for
/// which operator(g) * operator(h) represents R_g R_h = R_{compose(h, g)}.
struct RotationCoeffs {
    int k = 0;
    Rotation g = Rotation::identity();
    Eigen::MatrixXcd matrix;
    /// Rows filled by the least-squares oracle (degenerate scalars).
    std::vector<int> oracle_rows;
    /// Relative residual of the oracle solve, 0 when it was not needed.
    double oracle_residual = 0.0;

    Eigen::MatrixXcd operator_matrix() const { return matrix.transpose(); }
};

struct OracleOptions {
    /// Sample count = oversampling * (k+1)^2.
    int oversampling = 2;
    /// Offset into the Halton sequence; bumped on each resample.
    int start_index = 1;
    int max_attempts = 3;
    double max_condition = 1e10;
};

/// Closed-form coefficients
///   G_IJ^ij = A'^k/(k+1)^2 sum_{A,B} rho^{-i(A+B-k)} rho^{-j(A-B)} U^A V^B,
/// with degenerate rows taken from g_coeffs_oracle. Throws DomainError for
/// odd k.
RotationCoeffs g_coeffs(const Rotation& g, int k, double threshold = kDegeneracyThreshold,
                        const OracleOptions& oracle = {});

/// Least-squares solution of Phi_IJ(g x_s) = sum_ij G_IJ^ij Phi_ij(x_s) over
/// a low-discrepancy sample of S^3. Resamples when the sample matrix has
/// condition number above max_condition and throws NumericalError after
/// max_attempts.
RotationCoeffs g_coeffs_oracle(const Rotation& g, int k, const OracleOptions& opts = {});

/// Coefficients of R_g f for f = sum v_IJ Phi_IJ. Throws DomainError on size
/// mismatch.
Eigen::VectorXcd act_on_coeffs(const RotationCoeffs& G, const Eigen::VectorXcd& v);

/// The same operator in B2 coordinates, row convention:
///   R_g b_m = sum_m' W(m, m') b_m',
/// with b = script-T (Scaled) or T (Plain).
Eigen::MatrixXcd to_B2_frame(const RotationCoeffs& G, B2Scaling scaling = B2Scaling::Scaled);

/// Whether g acts diagonally on B2 (both quaternions in span{1, j3}).
bool is_toroidal(const Rotation& g, double tol = 1e-12);

/// Row-convention matrix of R_g on plain T of level k, valid for any k.
/// Toroidal rotations use the exact diagonal phases e^{i(l psi1 + m psi2)};
/// other rotations are fitted by least squares on T (orthonormal, so the
/// system is well conditioned).
Eigen::MatrixXcd b2_rotation_matrix(const Rotation& g, int k);

/// Quasi-random points of S^3, uniform for the volume measure (Halton
/// sequence in bases 2, 3, 5).
std::vector<ToroidalPoint> halton_points(int count, int start_index = 1);

}  // namespace s3modes
