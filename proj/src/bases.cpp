#include "s3modes/bases.hpp"

#include "detail.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "s3modes/combinatorics.hpp"
#include "s3modes/error.hpp"
#include "s3modes/jacobi.hpp"
#include "s3modes/roots.hpp"

namespace s3modes {

using detail::ipow;

ModeB2 ModeB2::from_doubled(int k, int two_m1, int two_m2) {
    if (k < 0) throw DomainError("ModeB2: negative k");
    auto valid = [k](int two_m) { return std::abs(two_m) <= k && (two_m + k) % 2 == 0; };
    if (!valid(two_m1) || !valid(two_m2)) {
        throw DomainError("ModeB2: (m1, m2) = (" + std::to_string(two_m1 / 2.0) + ", " +
                          std::to_string(two_m2 / 2.0) + ") out of range for k = " +
                          std::to_string(k));
    }
    return {k, two_m1, two_m2};
}

ModeB2 ModeB2::from_m(int k, double m1, double m2) {
    auto doubled = [](double m) {
        const double t = 2.0 * m;
        const double r = std::round(t);
        if (std::abs(t - r) > 1e-12) throw DomainError("ModeB2: index is not a half-integer");
        return static_cast<int>(r);
    };
    return from_doubled(k, doubled(m1), doubled(m2));
}

ModeB2 ModeB2::from_index(int k, int index) {
    const int n = k + 1;
    if (k < 0 || index < 0 || index >= n * n) throw DomainError("ModeB2: index out of range");
    return from_doubled(k, 2 * (index / n) - k, 2 * (index % n) - k);
}

int ModeB2::degree() const { return (k_ - std::abs(ell()) - std::abs(m())) / 2; }

void ModeB3::validate() const {
    require_even_level(k);
    if (I < 0 || I > k || J < 0 || J > k) {
        throw DomainError("ModeB3: (I, J) = (" + std::to_string(I) + ", " + std::to_string(J) +
                          ") out of range for k = " + std::to_string(k));
    }
}

int b2_index(const ModeB2& mode) {
    const int k = mode.k();
    return (mode.two_m1() + k) / 2 * (k + 1) + (mode.two_m2() + k) / 2;
}

int b3_index(const ModeB3& mode) { return mode.I * (mode.k + 1) + mode.J; }

std::vector<ModeB2> b2_modes(int k) {
    std::vector<ModeB2> modes;
    modes.reserve(static_cast<std::size_t>((k + 1) * (k + 1)));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) modes.push_back(ModeB2::from_doubled(k, 2 * a - k, 2 * b - k));
    return modes;
}

std::vector<ModeB3> b3_modes(int k) {
    require_even_level(k);
    std::vector<ModeB3> modes;
    modes.reserve(static_cast<std::size_t>((k + 1) * (k + 1)));
    for (int I = 0; I <= k; ++I)
        for (int J = 0; J <= k; ++J) modes.push_back({k, I, J});
    return modes;
}

void require_even_level(int k) {
    if (k < 0 || k % 2 != 0) throw DomainError("B3 defined for even k only (k = " + std::to_string(k) + ")");
}

double normalization_constant(const ModeB2& mode) {
    const int k = mode.k();
    const int L = std::abs(mode.ell());
    const int M = std::abs(mode.m());
    // Canonical indices m1' = (L - M)/2, m2' = (L + M)/2; the factorial ratio
    // (k/2+m2')!(k/2-m2')!/((k/2+m1')!(k/2-m1')!) = C(k, k/2+m1')/C(k, k/2+m2').
    const double num = static_cast<double>(exact_binomial(k, (k + L - M) / 2));
    const double den = static_cast<double>(exact_binomial(k, (k + L + M) / 2));
    return std::sqrt(static_cast<double>(k + 1)) / std::numbers::pi * std::sqrt(num / den);
}

std::complex<double> eval_T(const ModeB2& mode, const ToroidalPoint& p) {
    const int l = mode.ell();
    const int m = mode.m();
    const int L = std::abs(l);
    const int M = std::abs(m);
    double radial = normalization_constant(mode) * ipow(std::cos(p.chi), L) * ipow(std::sin(p.chi), M) *
                    jacobi_poly(mode.degree(), M, L, std::cos(2.0 * p.chi));
    if (m < 0 && M % 2 != 0) radial = -radial;
    return std::polar(radial, l * p.theta + m * p.phi);
}

Eigen::VectorXcd eval_T_all(int k, const ToroidalPoint& p) {
    const auto modes = b2_modes(k);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(modes.size()));
    for (std::size_t i = 0; i < modes.size(); ++i) v[static_cast<Eigen::Index>(i)] = eval_T(modes[i], p);
    return v;
}

ComplexQuaternion null_vector_ij(int k, int I, int J) {
    const RootsOfUnity roots(k);
    return null_vector(I * roots.alpha(), J * roots.alpha());
}

std::complex<double> eval_Phi(const ModeB3& mode, const ToroidalPoint& p, PhiRoute route) {
    mode.validate();
    if (route == PhiRoute::Cartesian) {
        const auto x = p.embed();
        const ComplexQuaternion n = null_vector_ij(mode.k, mode.I, mode.J);
        std::complex<double> dot = 0.0;
        for (int mu = 0; mu < 4; ++mu) dot += x[static_cast<std::size_t>(mu)] * n[mu];
        return ipow(dot, mode.k);
    }
    // n_IJ = rhȯ^I + i j2 rhȯ^J with rhȯ = cos alpha + j3 sin alpha.
    const RootsOfUnity roots(mode.k);
    auto dotted = [&](int power) {
        const double angle = power * roots.alpha();
        return ComplexQuaternion{std::cos(angle), 0.0, 0.0, std::sin(angle)};
    };
    const ComplexQuaternion i_j2{0.0, 0.0, std::complex<double>(0.0, 1.0), 0.0};
    const ComplexQuaternion n = dotted(mode.I) + i_j2 * dotted(mode.J);
    const ComplexQuaternion q = to_complex(point_to_quaternion(p));
    return ipow(scalar_product_via_products(n, q), mode.k);
}

Eigen::VectorXcd eval_Phi_all(int k, const ToroidalPoint& p) {
    require_even_level(k);
    const int n = k + 1;
    const auto x = p.embed();
    const RootsOfUnity roots(k);
    Eigen::VectorXcd v(n * n);
    for (int I = 0; I < n; ++I) {
        const double a = I * roots.alpha();
        const double real_part = x[0] * std::cos(a) + x[3] * std::sin(a);
        for (int J = 0; J < n; ++J) {
            const double b = J * roots.alpha();
            const std::complex<double> dot(real_part, x[1] * std::sin(b) + x[2] * std::cos(b));
            v[I * n + J] = ipow(dot, k);
        }
    }
    return v;
}

std::complex<double> eval_Phi_coherent(int k, double a, double b, const ToroidalPoint& p) {
    if (k < 0) throw DomainError("eval_Phi_coherent: negative k");
    const auto x = p.embed();
    const ComplexQuaternion n = null_vector(a, b);
    std::complex<double> dot = 0.0;
    for (int mu = 0; mu < 4; ++mu) dot += x[static_cast<std::size_t>(mu)] * n[mu];
    return ipow(dot, k);
}

double coeff_P(const ModeB2& mode) {
    const int k = mode.k();
    require_even_level(k);
    const double b1 = static_cast<double>(exact_binomial(k, (k + mode.two_m1()) / 2));
    const double b2 = static_cast<double>(exact_binomial(k, (k + mode.two_m2()) / 2));
    return std::ldexp(std::numbers::pi, -k) / std::sqrt(static_cast<double>(k + 1)) * std::sqrt(b1) *
           std::sqrt(b2);
}

Eigen::VectorXd coeff_P_all(int k) {
    const auto modes = b2_modes(k);
    Eigen::VectorXd v(static_cast<Eigen::Index>(modes.size()));
    for (std::size_t i = 0; i < modes.size(); ++i) v[static_cast<Eigen::Index>(i)] = coeff_P(modes[i]);
    return v;
}

std::string to_string(Basis b) { return b == Basis::B2 ? "B2" : "B3"; }

Basis basis_from_string(const std::string& s) {
    if (s == "B2" || s == "b2") return Basis::B2;
    if (s == "B3" || s == "b3") return Basis::B3;
    throw DomainError("unknown basis '" + s + "'");
}

std::string to_string(B2Scaling s) { return s == B2Scaling::Scaled ? "scaled" : "plain"; }

B2Scaling b2_scaling_from_string(const std::string& s) {
    if (s == "scaled") return B2Scaling::Scaled;
    if (s == "plain") return B2Scaling::Plain;
    throw DomainError("unknown B2 scaling '" + s + "'");
}

CoeffMatrix t_from_phi_matrix(int k) {
    require_even_level(k);
    const RootsOfUnity roots(k);
    const int n = k + 1;
    const double scale = 1.0 / static_cast<double>(n * n);
    CoeffMatrix out{k, Basis::B3, Basis::B2, B2Scaling::Scaled, Eigen::MatrixXcd(n * n, n * n)};
    for (const auto& mode : b2_modes(k)) {
        const int row = b2_index(mode);
        for (int I = 0; I < n; ++I)
            for (int J = 0; J < n; ++J)
                out.entries(row, I * n + J) =
                    scale * roots.power(static_cast<long long>(I) * mode.ell() -
                                        static_cast<long long>(J) * mode.m());
    }
    return out;
}

CoeffMatrix phi_from_t_matrix(int k) {
    require_even_level(k);
    const RootsOfUnity roots(k);
    const int n = k + 1;
    CoeffMatrix out{k, Basis::B2, Basis::B3, B2Scaling::Scaled, Eigen::MatrixXcd(n * n, n * n)};
    for (const auto& mode : b2_modes(k)) {
        const int col = b2_index(mode);
        for (int I = 0; I < n; ++I)
            for (int J = 0; J < n; ++J)
                out.entries(I * n + J, col) = roots.power(-static_cast<long long>(I) * mode.ell() +
                                                          static_cast<long long>(J) * mode.m());
    }
    return out;
}

CoeffMatrix with_b2_scaling(const CoeffMatrix& m, B2Scaling target) {
    if (m.scaling == target || (m.from != Basis::B2 && m.to != Basis::B2)) {
        CoeffMatrix same = m;
        same.scaling = target;
        return same;
    }
    const Eigen::VectorXd p = coeff_P_all(m.k);
    CoeffMatrix out = m;
    out.scaling = target;
    // script-T = P T. Rows expressing script-T scale by 1/P to express T;
    // columns on script-T scale by P when rewritten on T.
    const bool to_plain = target == B2Scaling::Plain;
    if (m.to == Basis::B2) {
        for (Eigen::Index r = 0; r < p.size(); ++r) out.entries.row(r) *= to_plain ? 1.0 / p[r] : p[r];
    }
    if (m.from == Basis::B2) {
        for (Eigen::Index c = 0; c < p.size(); ++c) out.entries.col(c) *= to_plain ? p[c] : 1.0 / p[c];
    }
    return out;
}

}  // namespace s3modes
