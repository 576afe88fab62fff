#include "s3modes/quad.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <span>

#include <Eigen/Dense>

#include "s3modes/bases.hpp"
#include "s3modes/error.hpp"
#include "s3modes/parallel.hpp"
#include "s3modes/sampling.hpp"

#include "detail.hpp"

namespace s3modes {

namespace {

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
    if (v.size() <= 8) {
        std::complex<double> s = 0.0;
        for (const auto& x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    // P_n(x) and P_n'(x) by the three-term recurrence.
    auto legendre = [n](double x) {
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

QuadratureRule make_rule(int n_u, int n_angle) {
    if (n_u < 1 || n_angle < 1) throw DomainError("make_rule: sizes must be positive");
    std::vector<double> u;
    std::vector<double> wu;
    gauss_legendre(n_u, u, wu);
    const double dangle = 2.0 * std::numbers::pi / n_angle;
    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(n_u * n_angle * n_angle));
    rule.weights.reserve(rule.nodes.capacity());
    for (int a = 0; a < n_u; ++a) {
        // cos chi sin chi dchi = -du/4 with u = cos 2 chi.
        const double chi = 0.5 * std::acos(u[static_cast<std::size_t>(a)]);
        const double w = 0.25 * wu[static_cast<std::size_t>(a)] * dangle * dangle;
        for (int b = 0; b < n_angle; ++b)
            for (int c = 0; c < n_angle; ++c) {
                rule.nodes.push_back({chi, b * dangle, c * dangle});
                rule.weights.push_back(w);
            }
    }
    return rule;
}

QuadratureRule default_rule(int k) { return make_rule(k + 2, 2 * k + 4); }

std::complex<double> integrate_values(const std::vector<std::complex<double>>& values,
                                      const QuadratureRule& rule) {
    if (values.size() != rule.size()) throw DomainError("integrate_values: size mismatch");
    std::vector<std::complex<double>> weighted(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) weighted[i] = rule.weights[i] * values[i];
    return pairwise_sum(weighted);
}

std::complex<double> integrate(const SphereFunction& f, const QuadratureRule& rule) {
    std::vector<std::complex<double>> values(rule.size());
    parallel_for(static_cast<int>(rule.size()),
                 [&](int i) { values[static_cast<std::size_t>(i)] = f(rule.nodes[static_cast<std::size_t>(i)]); });
    return integrate_values(values, rule);
}

std::complex<double> inner_product(const SphereFunction& f, const SphereFunction& g,
                                   const QuadratureRule& rule) {
    return integrate([&](const ToroidalPoint& p) { return f(p) * std::conj(g(p)); }, rule);
}

Eigen::MatrixXcd gram_matrix(const Eigen::MatrixXcd& values, const QuadratureRule& rule) {
    if (static_cast<std::size_t>(values.rows()) != rule.size()) throw DomainError("gram_matrix: size mismatch");
    const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), static_cast<Eigen::Index>(rule.size()));
    return values.adjoint() * w.asDiagonal() * values;
}

Eigen::MatrixXcd sample_T(int k, const QuadratureRule& rule) {
    const int n = (k + 1) * (k + 1);
    Eigen::MatrixXcd s(static_cast<Eigen::Index>(rule.size()), n);
    parallel_for(static_cast<int>(rule.size()),
                 [&](int i) { s.row(i) = eval_T_all(k, rule.nodes[static_cast<std::size_t>(i)]).transpose(); });
    return s;
}

Eigen::MatrixXcd sample_Phi(int k, const QuadratureRule& rule) {
    const int n = (k + 1) * (k + 1);
    Eigen::MatrixXcd s(static_cast<Eigen::Index>(rule.size()), n);
    parallel_for(static_cast<int>(rule.size()),
                 [&](int i) { s.row(i) = eval_Phi_all(k, rule.nodes[static_cast<std::size_t>(i)]).transpose(); });
    return s;
}

Projection project_onto_level(const SphereFunction& f, int k, const QuadratureRule& rule) {
    const Eigen::MatrixXcd t = sample_T(k, rule);
    Eigen::VectorXcd values(static_cast<Eigen::Index>(rule.size()));
    parallel_for(static_cast<int>(rule.size()),
                 [&](int i) { values[i] = f(rule.nodes[static_cast<std::size_t>(i)]); });
    const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), static_cast<Eigen::Index>(rule.size()));
    const Eigen::MatrixXcd gram = t.adjoint() * w.asDiagonal() * t;
    const Eigen::VectorXcd rhs = t.adjoint() * w.asDiagonal() * values;

    Projection out;
    out.coeffs = gram.ldlt().solve(rhs);
    const Eigen::VectorXcd r = values - t * out.coeffs;
    out.residual = std::sqrt(std::max(0.0, (w.array() * r.array().abs2()).sum()));
    out.norm = std::sqrt(std::max(0.0, (w.array() * values.array().abs2()).sum()));
    return out;
}

std::complex<double> fd_laplacian(const R4Function& f, const std::array<double, 4>& x, double h) {
    const std::complex<double> center = f(x);
    std::complex<double> sum = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        auto shifted = [&](double step) {
            auto y = x;
            y[mu] += step;
            return f(y);
        };
        sum += -shifted(2 * h) + 16.0 * shifted(h) - 30.0 * center + 16.0 * shifted(-h) - shifted(-2 * h);
    }
    return sum / (12.0 * h * h);
}

double harmonicity_residual(const ComplexQuaternion& n, int k, const HarmonicityOptions& opts) {
    if (k < 0) throw DomainError("harmonicity_residual: negative k");
    std::mt19937_64 rng(opts.seed);
    const R4Function f = [&](const std::array<double, 4>& x) {
        std::complex<double> dot = 0.0;
        for (int mu = 0; mu < 4; ++mu) dot += x[static_cast<std::size_t>(mu)] * n[mu];
        return detail::ipow(dot, k);
    };
    double worst = 0.0;
    for (int s = 0; s < opts.samples; ++s) {
        const auto x = random_unit_vector(rng);
        const double scale = std::max(1.0, std::abs(f(x)));
        worst = std::max(worst, std::abs(fd_laplacian(f, x, opts.h)) / scale);
    }
    return worst;
}

double homogeneous_harmonicity_residual(const SphereFunction& f, int k, const HarmonicityOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const R4Function ext = [&](const std::array<double, 4>& x) {
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
        return detail::ipow(r, k) * f(ToroidalPoint::from_cartesian(x));
    };
    double worst = 0.0;
    for (int s = 0; s < opts.samples; ++s) {
        const auto x = random_unit_vector(rng);
        const double scale = std::max(1.0, std::abs(ext(x)));
        worst = std::max(worst, std::abs(fd_laplacian(ext, x, opts.h)) / scale);
    }
    return worst;
}

}  // namespace s3modes
