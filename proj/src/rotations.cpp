#include "s3modes/rotations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "s3modes/error.hpp"
#include "s3modes/parallel.hpp"
#include "s3modes/quad.hpp"
#include "s3modes/roots.hpp"

#include "detail.hpp"

namespace s3modes {

namespace {

double radical_inverse(int index, int base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * (index % base);
        index /= base;
        f /= base;
    }
    return result;
}

ToroidalPoint rotate_point(const Rotation& g, const ToroidalPoint& p) {
    return ToroidalPoint::from_quaternion(g.apply(point_to_quaternion(p)));
}

}  // namespace

std::vector<ToroidalPoint> halton_points(int count, int start_index) {
    std::vector<ToroidalPoint> points;
    points.reserve(static_cast<std::size_t>(count));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int i = start_index; i < start_index + count; ++i) {
        // sin^2 chi is uniform under cos chi sin chi dchi.
        points.push_back({std::asin(std::sqrt(radical_inverse(i, 2))), two_pi * radical_inverse(i, 3),
                          two_pi * radical_inverse(i, 5)});
    }
    return points;
}

RotationScalars rotation_scalars(const Rotation& g, int k, int I, int J, double threshold) {
    ModeB3{k, I, J}.validate();
    const ComplexQuaternion n = null_vector_ij(k, I, J);
    RotationScalars s;
    s.A = scalar_product(g.apply(aux_alpha()), n);
    s.A_prime = scalar_product(g.apply(aux_alpha().bar()), n);
    s.B = scalar_product(g.apply(aux_beta()), n);
    s.D = scalar_product(g.apply(aux_delta()), n);
    const double scale = std::max({std::abs(s.A), std::abs(s.A_prime), std::abs(s.B), std::abs(s.D)});
    s.degenerate = std::min(std::abs(s.A_prime), std::abs(s.B)) < threshold * scale;
    if (!s.degenerate) {
        s.U = s.B / s.A_prime;
        s.V = s.A / s.B;
    }
    return s;
}

RotationCoeffs g_coeffs(const Rotation& g, int k, double threshold, const OracleOptions& oracle) {
    require_even_level(k);
    const int n = k + 1;
    const RootsOfUnity roots(k);
    RotationCoeffs out{k, g, Eigen::MatrixXcd::Zero(n * n, n * n), {}, 0.0};
    std::vector<char> degenerate(static_cast<std::size_t>(n * n), 0);

    // The double sum over (A, B) factorizes:
    //   sum_{A,B} rho^{-i(A+B-k)} rho^{-j(A-B)} U^A V^B
    //     = rho^{ik} S_U[(i+j) mod n] S_V[(i-j) mod n],
    //   S_U[s] = sum_A rho^{-sA} U^A,  S_V[t] = sum_B rho^{-tB} V^B.
    parallel_for(n * n, [&](int row) {
        const RotationScalars s = rotation_scalars(g, k, row / n, row % n, threshold);
        if (s.degenerate) {
            degenerate[static_cast<std::size_t>(row)] = 1;
            return;
        }
        std::vector<std::complex<double>> u_pow(static_cast<std::size_t>(n));
        std::vector<std::complex<double>> v_pow(static_cast<std::size_t>(n));
        u_pow[0] = v_pow[0] = 1.0;
        for (int a = 1; a < n; ++a) {
            u_pow[static_cast<std::size_t>(a)] = u_pow[static_cast<std::size_t>(a - 1)] * s.U;
            v_pow[static_cast<std::size_t>(a)] = v_pow[static_cast<std::size_t>(a - 1)] * s.V;
        }
        std::vector<std::complex<double>> su(static_cast<std::size_t>(n), 0.0);
        std::vector<std::complex<double>> sv(static_cast<std::size_t>(n), 0.0);
        for (int t = 0; t < n; ++t)
            for (int a = 0; a < n; ++a) {
                const std::complex<double> phase = roots.power(-static_cast<long long>(t) * a);
                su[static_cast<std::size_t>(t)] += phase * u_pow[static_cast<std::size_t>(a)];
                sv[static_cast<std::size_t>(t)] += phase * v_pow[static_cast<std::size_t>(a)];
            }
        const std::complex<double> prefactor = detail::ipow(s.A_prime, k) / static_cast<double>(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                out.matrix(row, i * n + j) = prefactor * roots.power(static_cast<long long>(i) * k) *
                                             su[static_cast<std::size_t>((i + j) % n)] *
                                             sv[static_cast<std::size_t>(((i - j) % n + n) % n)];
            }
    });

    for (int row = 0; row < n * n; ++row)
        if (degenerate[static_cast<std::size_t>(row)]) out.oracle_rows.push_back(row);
    if (!out.oracle_rows.empty()) {
        const RotationCoeffs fit = g_coeffs_oracle(g, k, oracle);
        for (const int row : out.oracle_rows) out.matrix.row(row) = fit.matrix.row(row);
        out.oracle_residual = fit.oracle_residual;
    }
    return out;
}

RotationCoeffs g_coeffs_oracle(const Rotation& g, int k, const OracleOptions& opts) {
    require_even_level(k);
    const int dim = (k + 1) * (k + 1);
    const int samples = std::max(1, opts.oversampling) * dim;
    int start = opts.start_index;
    double last_condition = 0.0;
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt, start += samples) {
        const auto points = halton_points(samples, start);
        Eigen::MatrixXcd basis(samples, dim);
        Eigen::MatrixXcd rotated(samples, dim);
        parallel_for(samples, [&](int s) {
            const auto& x = points[static_cast<std::size_t>(s)];
            basis.row(s) = eval_Phi_all(k, x).transpose();
            rotated.row(s) = eval_Phi_all(k, rotate_point(g, x)).transpose();
        });
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        last_condition = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1]
                                                  : std::numeric_limits<double>::infinity();
        if (!(last_condition <= opts.max_condition)) continue;
        const Eigen::MatrixXcd x = svd.solve(rotated);
        RotationCoeffs out{k, g, x.transpose(), {}, 0.0};
        out.oracle_rows.resize(static_cast<std::size_t>(dim));
        for (int r = 0; r < dim; ++r) out.oracle_rows[static_cast<std::size_t>(r)] = r;
        out.oracle_residual = (basis * x - rotated).norm() / rotated.norm();
        return out;
    }
    throw NumericalError("g_coeffs_oracle: sample matrix condition number " + std::to_string(last_condition) +
                         " above limit after " + std::to_string(opts.max_attempts) + " attempts");
}

Eigen::VectorXcd act_on_coeffs(const RotationCoeffs& G, const Eigen::VectorXcd& v) {
    if (v.size() != G.matrix.rows()) {
        throw DomainError("act_on_coeffs: vector has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(G.matrix.rows()));
    }
    return G.matrix.transpose() * v;
}

Eigen::MatrixXcd to_B2_frame(const RotationCoeffs& G, B2Scaling scaling) {
    // R_g script-T_m = sum E(m, IJ) G(IJ, ij) F(ij, m') script-T_m'.
    const Eigen::MatrixXcd w = t_from_phi_matrix(G.k).entries * G.matrix * phi_from_t_matrix(G.k).entries;
    if (scaling == B2Scaling::Scaled) return w;
    const Eigen::VectorXd p = coeff_P_all(G.k);
    return p.cwiseInverse().asDiagonal() * w * p.asDiagonal();
}

bool is_toroidal(const Rotation& g, double tol) {
    return std::abs(g.left()[1]) < tol && std::abs(g.left()[2]) < tol && std::abs(g.right()[1]) < tol &&
           std::abs(g.right()[2]) < tol;
}

Eigen::MatrixXcd b2_rotation_matrix(const Rotation& g, int k) {
    if (k < 0) throw DomainError("b2_rotation_matrix: negative k");
    const int dim = (k + 1) * (k + 1);
    if (is_toroidal(g)) {
        // L = e^{j3 a}, R = e^{j3 b}: theta -> theta + a + b, phi -> phi + a - b.
        const double a = std::atan2(g.left()[3], g.left()[0]);
        const double b = std::atan2(g.right()[3], g.right()[0]);
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto& mode : b2_modes(k)) {
            const int i = b2_index(mode);
            w(i, i) = std::polar(1.0, mode.ell() * (a + b) + mode.m() * (a - b));
        }
        return w;
    }
    // R_g T_m lies in V^k; project it on T with a rule exact for level-k products.
    const QuadratureRule rule = default_rule(k);
    const Eigen::MatrixXcd t = sample_T(k, rule);
    Eigen::MatrixXcd rotated(t.rows(), dim);
    parallel_for(static_cast<int>(rule.size()), [&](int i) {
        rotated.row(i) = eval_T_all(k, rotate_point(g, rule.nodes[static_cast<std::size_t>(i)])).transpose();
    });
    const Eigen::Map<const Eigen::VectorXd> wts(rule.weights.data(), static_cast<Eigen::Index>(rule.size()));
    const Eigen::MatrixXcd gram = t.adjoint() * wts.asDiagonal() * t;
    const Eigen::MatrixXcd coeffs = gram.ldlt().solve(t.adjoint() * wts.asDiagonal() * rotated);
    return coeffs.transpose();
}

}  // namespace s3modes
