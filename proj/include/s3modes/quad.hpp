#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "s3modes/quaternion.hpp"
#include "s3modes/toroidal.hpp"

namespace s3modes {

using SphereFunction = std::function<std::complex<double>(const ToroidalPoint&)>;
using R4Function = std::function<std::complex<double>(const std::array<double, 4>&)>;

/// Tensor-product rule on S^3 for the measure cos chi sin chi dchi dtheta dphi:
/// Gauss-Legendre in u = cos 2 chi times uniform grids in theta and phi.
/// Exact on u^a e^{i b theta} e^{i c phi} for a <= 2 n_u - 1 and
/// |b|, |c| < n_angle.
struct QuadratureRule {
    std::vector<ToroidalPoint> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

QuadratureRule make_rule(int n_u, int n_angle);

/// Default rule for products of two level-k functions: n_u = k+2, n_angle = 2k+4.
QuadratureRule default_rule(int k);

/// Sum of w_i f(x_i) using pairwise (tree) summation, so the result does not
/// depend on thread count.
std::complex<double> integrate(const SphereFunction& f, const QuadratureRule& rule);
std::complex<double> integrate_values(const std::vector<std::complex<double>>& values,
                                      const QuadratureRule& rule);

/// Integral of f conj(g) over S^3.
std::complex<double> inner_product(const SphereFunction& f, const SphereFunction& g,
                                   const QuadratureRule& rule);

/// Gram matrix G(a, b) = integral of conj(f_a) f_b, where column a of
/// `values` holds f_a sampled at the rule's nodes.
Eigen::MatrixXcd gram_matrix(const Eigen::MatrixXcd& values, const QuadratureRule& rule);

/// Samples of all T of level k (columns, b2_index order) at the rule's nodes.
Eigen::MatrixXcd sample_T(int k, const QuadratureRule& rule);
/// Samples of all Phi of level k (columns, b3_index order) at the rule's nodes.
Eigen::MatrixXcd sample_Phi(int k, const QuadratureRule& rule);

struct Projection {
    Eigen::VectorXcd coeffs;      ///< B2 coefficients, b2_index order.
    double residual = 0.0;        ///< L2 norm of f - sum c T.
    double norm = 0.0;            ///< L2 norm of f.
    double relative_residual() const { return norm > 0.0 ? residual / norm : residual; }
};

/// Orthogonal projection of f onto span{T_{k;m1,m2}} under `rule`.
Projection project_onto_level(const SphereFunction& f, int k, const QuadratureRule& rule);

/// Fourth-order central finite-difference Laplacian of F at x in R^4.
std::complex<double> fd_laplacian(const R4Function& f, const std::array<double, 4>& x, double h);

struct HarmonicityOptions {
    double h = 1e-3;
    int samples = 20;
    unsigned long long seed = 7;
};

/// max over sample points of |Laplacian (x . N)^k| / max(1, |(x . N)^k|),
/// with the Laplacian taken by finite differences in R^4 at points of S^3.
double harmonicity_residual(const ComplexQuaternion& n, int k,
                            const HarmonicityOptions& opts = {});

/// Same measure for the homogeneous extension r^k f(x/r) of a function on S^3.
double homogeneous_harmonicity_residual(const SphereFunction& f, int k,
                                        const HarmonicityOptions& opts = {});

}  // namespace s3modes
