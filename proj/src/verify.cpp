#include "s3modes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "s3modes/bases.hpp"
#include "s3modes/quad.hpp"
#include "s3modes/quotients.hpp"
#include "s3modes/roots.hpp"
#include "s3modes/rotations.hpp"
#include "s3modes/sampling.hpp"

namespace s3modes {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double inf_norm(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

ToroidalPoint rotate_point(const Rotation& g, const ToroidalPoint& p) {
    return ToroidalPoint::from_quaternion(g.apply(point_to_quaternion(p)));
}

/// Value at p of sum_m c_m T_m.
cd eval_t_combination(const Eigen::VectorXcd& c, int k, const ToroidalPoint& p) {
    return eval_T_all(k, p).transpose() * c;
}

/// Swaps x0 and x1 and flips x2; B(0,0) vanishes for it at every even k.
Rotation degenerate_rotation() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(1, 0) = 1.0;
    m(0, 1) = 1.0;
    m(2, 2) = -1.0;
    m(3, 3) = 1.0;
    return rotation_from_matrix(m);
}

/// Worst |f(g x) - f(x)| over sample points for f = sum c_m T_m.
double pointwise_invariance(const std::vector<Eigen::VectorXcd>& vectors, int k,
                            const std::vector<Rotation>& rotations,
                            const std::vector<ToroidalPoint>& points) {
    double worst = 0.0;
    for (const auto& p : points) {
        const Eigen::VectorXcd tx = eval_T_all(k, p);
        for (const auto& g : rotations) {
            const Eigen::VectorXcd tgx = eval_T_all(k, rotate_point(g, p));
            for (const auto& c : vectors) {
                const cd diff = (tgx - tx).transpose() * c;
                worst = std::max(worst, std::abs(diff));
            }
        }
    }
    return worst;
}

std::vector<ToroidalPoint> random_points(std::mt19937_64& rng, int n) {
    std::vector<ToroidalPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
    return pts;
}

}  // namespace

nlohmann::json Tolerances::to_json() const {
    return {{"roots", roots},
            {"orthogonality", orthogonality},
            {"harmonic", harmonic},
            {"membership", membership},
            {"roundtrip", roundtrip},
            {"coefficient", coefficient},
            {"rotation", rotation},
            {"scalars", scalars},
            {"invariance", invariance}};
}

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); }) &&
           std::all_of(counts.begin(), counts.end(), [](const CountCheck& c) { return c.passed(); });
}

nlohmann::json SuiteResult::to_json() const {
    nlohmann::json j{{"suite", suite}, {"k", k}, {"passed", passed()}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
    j["counts"] = nlohmann::json::array();
    for (const auto& c : counts)
        j["counts"].push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed()}});
    j["notes"] = notes;
    return j;
}

SuiteResult verify_bases(int k, const Tolerances& tol, unsigned long long seed) {
    SuiteResult r{"bases", k, {}, {}, {}};
    std::mt19937_64 rng(seed);
    const bool even = k % 2 == 0;

    const QuadratureRule rule = default_rule(k);
    const Eigen::MatrixXcd gram = gram_matrix(sample_T(k, rule), rule);
    const Eigen::VectorXd diag = gram.diagonal().real();
    Eigen::MatrixXcd off = gram;
    off.diagonal().setZero();
    r.checks.push_back({"gram_offdiagonal", max_abs(off), tol.orthogonality});
    r.checks.push_back({"gram_diagonal_spread", diag.maxCoeff() - diag.minCoeff(), tol.orthogonality});
    r.notes.push_back("gram diagonal = " + std::to_string(diag.mean()));

    if (!even) {
        r.notes.push_back("odd k: B3, change of basis and coherent coefficients skipped");
        return r;
    }

    const RootsOfUnity roots(k);
    double roots_err = 0.0;
    for (int I = -2 * (k + 1); I <= 2 * (k + 1); ++I)
        roots_err = std::max(roots_err, std::abs(roots.power_sum(I) - double(roots.power_sum_exact(I))));
    r.checks.push_back({"roots_of_unity", roots_err, tol.roots});

    const QuadratureRule fine = make_rule(2 * k + 4, 4 * k + 8);
    double harm = 0.0, member = 0.0;
    for (int s = 0; s < 20; ++s) {
        const ComplexQuaternion n = random_null_vector(rng);
        HarmonicityOptions opts;
        opts.seed = seed + static_cast<unsigned long long>(s);
        harm = std::max(harm, harmonicity_residual(n, k, opts));
        const SphereFunction f = [&](const ToroidalPoint& p) {
            const auto x = p.embed();
            cd dot{};
            for (int mu = 0; mu < 4; ++mu) dot += x[static_cast<std::size_t>(mu)] * n[mu];
            cd v{1.0};
            for (int e = 0; e < k; ++e) v *= dot;
            return v;
        };
        member = std::max(member, project_onto_level(f, k, fine).relative_residual());
    }
    r.checks.push_back({"harmonicity", harm, tol.harmonic});
    r.checks.push_back({"membership", member, tol.membership});

    const Eigen::MatrixXcd E = t_from_phi_matrix(k).entries;
    const Eigen::MatrixXcd F = phi_from_t_matrix(k).entries;
    const long n = E.rows();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    r.checks.push_back({"roundtrip_inf_norm", std::max(inf_norm(E * F - I), inf_norm(F * E - I)), tol.roundtrip});

    const Eigen::VectorXd P = coeff_P_all(k);
    double pointwise = 0.0, routes = 0.0;
    for (int s = 0; s < 20; ++s) {
        const ToroidalPoint p = random_point(rng);
        const Eigen::VectorXcd scaled = P.cast<cd>().cwiseProduct(eval_T_all(k, p));
        const Eigen::VectorXcd phi = eval_Phi_all(k, p);
        pointwise = std::max({pointwise, max_abs(E * phi - scaled), max_abs(F * scaled - phi)});
        for (const auto& mode : b3_modes(k))
            routes = std::max(routes, std::abs(eval_Phi(mode, p, PhiRoute::Cartesian) -
                                               eval_Phi(mode, p, PhiRoute::Quaternionic)));
    }
    r.checks.push_back({"pointwise_reconstruction", pointwise, tol.roundtrip});
    r.checks.push_back({"phi_route_agreement", routes, tol.roundtrip});

    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double coeff = 0.0;
    for (int s = 0; s < 3; ++s) {
        const double a = s == 0 ? 0.0 : angle(rng);
        const double b = s == 0 ? 0.0 : angle(rng);
        const Projection proj = project_onto_level(
            [&](const ToroidalPoint& p) { return eval_Phi_coherent(k, a, b, p); }, k, rule);
        for (const auto& mode : b2_modes(k)) {
            const int idx = b2_index(mode);
            const cd expected = P[idx] * std::polar(1.0, -a * mode.ell() + b * mode.m());
            coeff = std::max(coeff, std::abs(proj.coeffs[idx] - expected) / P[idx]);
        }
    }
    r.checks.push_back({"coherent_coefficients", coeff, tol.coefficient});
    return r;
}

SuiteResult verify_quad(int k, const Tolerances& tol, unsigned long long seed) {
    SuiteResult r{"quad", k, {}, {}, {}};
    std::mt19937_64 rng(seed);
    const int n_u = k + 2, n_angle = 2 * k + 4;
    const QuadratureRule rule = make_rule(n_u, n_angle);

    r.checks.push_back({"rule_volume",
                        std::abs(integrate([](const ToroidalPoint&) { return cd{1.0}; }, rule) - 2.0 * kPi * kPi),
                        tol.orthogonality});
    r.checks.push_back(
        {"rule_cos2_chi",
         std::abs(integrate([](const ToroidalPoint& p) { return cd{std::cos(p.chi) * std::cos(p.chi)}; }, rule) -
                  kPi * kPi),
         tol.orthogonality});

    double poly = 0.0;
    for (int a = 0; a <= 2 * n_u - 1; ++a) {
        const cd got = integrate([a](const ToroidalPoint& p) { return cd{std::pow(std::cos(2.0 * p.chi), a)}; }, rule);
        const double exact = a % 2 == 0 ? kPi * kPi * 2.0 / (a + 1) : 0.0;
        poly = std::max(poly, std::abs(got - exact));
    }
    r.checks.push_back({"rule_polynomial_exactness", poly, tol.orthogonality});

    double fourier = 0.0;
    for (int b = -(n_angle - 1); b < n_angle; ++b)
        for (int c = -(n_angle - 1); c < n_angle; ++c) {
            if (b == 0 && c == 0) continue;
            fourier = std::max(fourier, std::abs(integrate(
                                            [b, c](const ToroidalPoint& p) { return std::polar(1.0, b * p.theta + c * p.phi); },
                                            rule)));
        }
    r.checks.push_back({"rule_fourier_exactness", fourier, tol.orthogonality});

    std::normal_distribution<double> normal;
    const long dim = static_cast<long>(k + 1) * (k + 1);
    Eigen::VectorXcd c(dim);
    for (long i = 0; i < dim; ++i) c[i] = {normal(rng), normal(rng)};
    c.normalize();
    const SphereFunction f = [&](const ToroidalPoint& p) { return eval_t_combination(c, k, p); };
    const Projection once = project_onto_level(f, k, rule);
    const Projection twice =
        project_onto_level([&](const ToroidalPoint& p) { return eval_t_combination(once.coeffs, k, p); }, k, rule);
    r.checks.push_back({"projection_recovers_coefficients", max_abs(once.coeffs - c), tol.roundtrip});
    r.checks.push_back({"projection_idempotence", max_abs(twice.coeffs - once.coeffs), tol.roundtrip});
    r.checks.push_back({"projection_residual", once.relative_residual(), tol.membership});

    HarmonicityOptions opts;
    opts.seed = seed;
    r.checks.push_back({"eigenvalue_identity", homogeneous_harmonicity_residual(f, k, opts), tol.harmonic});
    return r;
}

SuiteResult verify_rotations(int k, const Tolerances& tol, unsigned long long seed, int random_rotations) {
    SuiteResult r{"rotations", k, {}, {}, {}};
    std::mt19937_64 rng(seed);
    const long dim = static_cast<long>(k + 1) * (k + 1);
    const Eigen::MatrixXcd Id = Eigen::MatrixXcd::Identity(dim, dim);

    if (k % 2 != 0) {
        r.notes.push_back("odd k: closed-form G undefined, checking the B2 quadrature route");
        double comp = 0.0, unit = 0.0;
        for (int s = 0; s < random_rotations; ++s) {
            const Rotation g = random_rotation(rng), h = random_rotation(rng);
            const Eigen::MatrixXcd Wg = b2_rotation_matrix(g, k), Wh = b2_rotation_matrix(h, k);
            comp = std::max(comp, max_abs(Wg * Wh - b2_rotation_matrix(rotation_compose(g, h), k)));
            unit = std::max(unit, max_abs(Wg.adjoint() * Wg - Id));
        }
        r.checks.push_back({"b2_composition", comp, tol.rotation});
        r.checks.push_back({"b2_unitarity", unit, tol.rotation});
        return r;
    }

    r.checks.push_back({"identity", max_abs(g_coeffs(Rotation::identity(), k).matrix - Id), tol.rotation});

    const QuadratureRule rule = default_rule(k);
    const Eigen::MatrixXcd gamma = gram_matrix(sample_Phi(k, rule), rule);
    const double gamma_scale = std::max(1.0, max_abs(gamma));

    double vs_oracle = 0.0, residual = 0.0, comp = 0.0, inverse = 0.0, iso = 0.0;
    for (int s = 0; s < random_rotations; ++s) {
        const Rotation g = random_rotation(rng), h = random_rotation(rng);
        const RotationCoeffs G = g_coeffs(g, k);
        const RotationCoeffs O = g_coeffs_oracle(g, k);
        vs_oracle = std::max(vs_oracle, max_abs(G.matrix - O.matrix));
        residual = std::max(residual, O.oracle_residual);
        const Eigen::MatrixXcd Mg = G.operator_matrix();
        const Eigen::MatrixXcd Mh = g_coeffs(h, k).operator_matrix();
        comp = std::max(comp, max_abs(Mg * Mh - g_coeffs(rotation_compose(h, g), k).operator_matrix()));
        inverse = std::max(inverse, max_abs(g_coeffs(g.inverse(), k).operator_matrix() * Mg - Id));
        iso = std::max(iso, max_abs(Mg.adjoint() * gamma * Mg - gamma) / gamma_scale);
    }
    r.checks.push_back({"closed_form_vs_oracle", vs_oracle, tol.rotation});
    r.checks.push_back({"oracle_residual", residual, tol.rotation});
    r.checks.push_back({"composition", comp, tol.rotation});
    r.checks.push_back({"inverse", inverse, tol.rotation});
    r.checks.push_back({"gram_preservation", iso, tol.rotation});

    const RootsOfUnity roots(k);
    const Rotation flip = prism_generators(2).second;
    double scal = 0.0;
    for (int I = 0; I <= k; ++I)
        for (int J = 0; J <= k; ++J) {
            const RotationScalars sc = rotation_scalars(flip, k, I, J);
            scal = std::max({scal, std::abs(sc.A + roots.power(J)), std::abs(sc.A_prime - roots.power(-J)),
                             std::abs(sc.B - roots.power(I)), std::abs(sc.D + roots.power(-I))});
        }
    r.checks.push_back({"prism_scalars", scal, tol.scalars});

    const Eigen::MatrixXcd W = to_B2_frame(g_coeffs(flip, k), B2Scaling::Scaled);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& mode : b2_modes(k)) {
        const int sign = ((mode.two_m2() / 2 + k / 2) % 2 == 0) ? 1 : -1;
        expected(b2_index(mode), b2_index(ModeB2::from_doubled(k, mode.two_m1(), -mode.two_m2()))) = double(sign);
    }
    r.checks.push_back({"prism_b2_law", max_abs(W - expected), tol.rotation});

    const int p = 5, q = 1;
    const RotationCoeffs lens = g_coeffs_oracle(lens_rotation(p, q), k);
    const Eigen::MatrixXcd WL = to_B2_frame(lens, B2Scaling::Scaled);
    Eigen::MatrixXcd phases = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& mode : b2_modes(k))
        phases(b2_index(mode), b2_index(mode)) = std::polar(1.0, 2.0 * kPi * (mode.ell() + q * mode.m()) / p);
    r.checks.push_back({"lens_oracle_diagonal_phases", max_abs(WL - phases), tol.rotation});

    const Rotation deg = degenerate_rotation();
    const RotationCoeffs D = g_coeffs(deg, k);
    r.counts.push_back({"degenerate_rows_detected", 1, D.oracle_rows.empty() ? 0 : 1});
    r.notes.push_back("degenerate rotation: " + std::to_string(D.oracle_rows.size()) + " oracle rows");
    r.checks.push_back({"degenerate_fallback_vs_b2_route",
                        max_abs(to_B2_frame(D, B2Scaling::Plain) - b2_rotation_matrix(deg, k)), tol.rotation});
    return r;
}

SuiteResult verify_quotients(int k, const Tolerances& tol, unsigned long long seed) {
    SuiteResult r{"quotients", k, {}, {}, {}};
    std::mt19937_64 rng(seed);
    const std::vector<ToroidalPoint> points = random_points(rng, 100);

    const std::vector<std::pair<int, int>> lenses{{3, 1}, {5, 1}, {5, 2}, {7, 3}};
    for (const auto& [p, q] : lenses) {
        const std::string name = "lens(" + std::to_string(p) + "," + std::to_string(q) + ")";
        const GroupSpec spec = GroupSpec::lens(p, q);
        const FiniteGroup group = close_group(spec.generators());
        const Eigen::MatrixXcd proj = invariant_projector_b2(group, k);
        const int rank = numerical_rank(proj);
        r.counts.push_back({name + "_rank_vs_condition", static_cast<long>(lens_modes(p, q, k).size()), rank});
        r.checks.push_back({name + "_projector_idempotence", max_abs(proj * proj - proj), tol.invariance});
        const InvariantSubspace sub = invariant_subspace(spec, k);
        r.checks.push_back(
            {name + "_pointwise_invariance", pointwise_invariance(sub.basis_t, k, group.elements, points),
             tol.invariance});
    }

    for (int P : {2, 3}) {
        const std::string name = "prism(" + std::to_string(P) + ")";
        const GroupSpec spec = GroupSpec::prism(P);
        const MultiplicityReport rep = multiplicity(spec, k);
        r.counts.push_back({name + "_rank_vs_construction", rep.closed_form.value_or(-1), rep.projector_rank});
        if (!rep.published_agrees)
            r.notes.push_back(name + ": published formula gives " + std::to_string(rep.published.value_or(-1)) +
                              ", projector rank " + std::to_string(rep.projector_rank));
        const auto [g1, g2] = prism_generators(P);
        std::vector<Eigen::VectorXcd> plain;
        if (k % 2 == 0) {
            const Eigen::VectorXd Pm = coeff_P_all(k);
            for (const auto& v : prism_modes(P, k)) plain.push_back(v.cwiseProduct(Pm.cast<cd>()));
        }
        r.checks.push_back(
            {name + "_construction_invariance", pointwise_invariance(plain, k, {g1, g2}, points), tol.invariance});
    }
    return r;
}

}  // namespace s3modes
