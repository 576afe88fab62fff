#include "s3modes/quotients.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "s3modes/combinatorics.hpp"
#include "s3modes/error.hpp"
#include "s3modes/parallel.hpp"
#include "s3modes/rotations.hpp"
#include "s3modes/serialize.hpp"

namespace s3modes {

GroupSpec GroupSpec::lens(int p, int q) {
    GroupSpec s{LensSpec{p, q}};
    s.validate();
    return s;
}

GroupSpec GroupSpec::prism(int P) {
    GroupSpec s{PrismSpec{P}};
    s.validate();
    return s;
}

GroupSpec GroupSpec::custom(std::vector<Rotation> generators) {
    return GroupSpec{CustomSpec{std::move(generators)}};
}

void GroupSpec::validate() const {
    if (const auto* lens = std::get_if<LensSpec>(&variant)) {
        if (!(0 < lens->q && lens->q < lens->p) || gcd(lens->p, lens->q) != 1) {
            throw DomainError("lens space L(" + std::to_string(lens->p) + "," + std::to_string(lens->q) +
                              ") requires 0 < q < p and gcd(p, q) = 1");
        }
    } else if (const auto* prism = std::get_if<PrismSpec>(&variant)) {
        if (prism->P < 2) throw DomainError("prism space requires P >= 2");
    }
}

std::vector<Rotation> GroupSpec::generators() const {
    validate();
    if (const auto* lens = std::get_if<LensSpec>(&variant)) return {lens_rotation(lens->p, lens->q)};
    if (const auto* prism = std::get_if<PrismSpec>(&variant)) {
        const auto [first, second] = prism_generators(prism->P);
        return {first, second};
    }
    return std::get<CustomSpec>(variant).generators;
}

std::string GroupSpec::describe() const {
    if (const auto* lens = std::get_if<LensSpec>(&variant))
        return "lens:" + std::to_string(lens->p) + "," + std::to_string(lens->q);
    if (const auto* prism = std::get_if<PrismSpec>(&variant)) return "prism:" + std::to_string(prism->P);
    return "custom:" + std::to_string(std::get<CustomSpec>(variant).generators.size()) + " generators";
}

namespace {

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw DomainError("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw DomainError("expected an integer, got '" + s + "'");
    return value;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    if (text.rfind("lens:", 0) == 0) {
        const std::string args = text.substr(5);
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw DomainError("lens spec must be 'lens:p,q'");
        return GroupSpec::lens(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
    }
    if (text.rfind("prism:", 0) == 0) return GroupSpec::prism(parse_int(text.substr(6)));

    std::ifstream in(text);
    if (!in) throw DomainError("group spec '" + text + "' is neither lens:p,q, prism:P nor a readable file");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("invalid group JSON in '" + text + "': " + e.what());
    }
    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
        throw DomainError("group JSON needs a nonempty 'generators' array");
    }
    std::vector<Rotation> gens;
    for (const auto& g : doc["generators"]) gens.push_back(rotation_from_json(g));
    return GroupSpec::custom(std::move(gens));
}

Rotation toroidal_rotation(double psi1, double psi2) {
    const Quaternion w1{std::cos(psi1 / 2), 0.0, 0.0, std::sin(psi1 / 2)};
    const Quaternion w2{std::cos(psi2 / 2), 0.0, 0.0, std::sin(psi2 / 2)};
    return Rotation::normalized(w1 * w2, w1 * w2.bar());
}

Rotation lens_rotation(int p, int q) {
    if (p < 1 || gcd(p, q) != 1) {
        throw DomainError("lens_rotation: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    }
    return toroidal_rotation(2.0 * std::numbers::pi / p, 2.0 * std::numbers::pi * q / p);
}

std::pair<Rotation, Rotation> prism_generators(int P) {
    if (P < 2) throw DomainError("prism_generators: P must be >= 2");
    const double psi = std::numbers::pi / P;
    return {toroidal_rotation(psi, psi), Rotation(-Quaternion::unit(1), Quaternion::one())};
}

FiniteGroup close_group(const std::vector<Rotation>& generators, int max_order) {
    FiniteGroup group;
    group.elements.push_back(Rotation::identity());
    auto known = [&](const Rotation& r) {
        for (const auto& e : group.elements)
            if (e.same_element(r)) return true;
        return false;
    };
    // Left-multiplying by generators reaches every element of a finite group.
    for (std::size_t next = 0; next < group.elements.size(); ++next) {
        for (const auto& s : generators) {
            const Rotation candidate = rotation_compose(s, group.elements[next]).canonical();
            if (known(candidate)) continue;
            group.elements.push_back(candidate);
            if (group.order() > max_order) {
                throw NumericalError("close_group: more than " + std::to_string(max_order) +
                                     " elements; group is infinite or too large");
            }
        }
    }
    return group;
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * std::max(1.0, sv[0]);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    return rank;
}

namespace {

struct Projectors {
    Eigen::MatrixXcd b3;     ///< empty for odd k
    Eigen::MatrixXcd plain;  ///< plain-T coefficient columns
};

Projectors averaged_projectors(const FiniteGroup& group, int k) {
    const int dim = (k + 1) * (k + 1);
    const int order = group.order();
    std::vector<Eigen::MatrixXcd> b3(static_cast<std::size_t>(order));
    std::vector<Eigen::MatrixXcd> plain(static_cast<std::size_t>(order));
    const bool even = k % 2 == 0;
    parallel_for(order, [&](int e) {
        const auto& g = group.elements[static_cast<std::size_t>(e)];
        if (even) {
            const RotationCoeffs coeffs = g_coeffs(g, k);
            b3[static_cast<std::size_t>(e)] = coeffs.operator_matrix();
            plain[static_cast<std::size_t>(e)] = to_B2_frame(coeffs, B2Scaling::Plain).transpose();
        } else {
            plain[static_cast<std::size_t>(e)] = b2_rotation_matrix(g, k).transpose();
        }
    });
    Projectors out;
    out.plain = Eigen::MatrixXcd::Zero(dim, dim);
    if (even) out.b3 = Eigen::MatrixXcd::Zero(dim, dim);
    // Fixed summation order over group elements.
    for (int e = 0; e < order; ++e) {
        out.plain += plain[static_cast<std::size_t>(e)];
        if (even) out.b3 += b3[static_cast<std::size_t>(e)];
    }
    out.plain /= static_cast<double>(order);
    if (even) out.b3 /= static_cast<double>(order);
    return out;
}

}  // namespace

Eigen::MatrixXcd invariant_projector(const FiniteGroup& group, int k) {
    if (k < 0) throw DomainError("invariant_projector: negative k");
    Projectors p = averaged_projectors(group, k);
    return k % 2 == 0 ? p.b3 : p.plain;
}

Eigen::MatrixXcd invariant_projector_b2(const FiniteGroup& group, int k) {
    if (k < 0) throw DomainError("invariant_projector_b2: negative k");
    return averaged_projectors(group, k).plain;
}

InvariantSubspace invariant_subspace(const GroupSpec& spec, int k) {
    if (k < 0) throw DomainError("invariant_subspace: negative k");
    const FiniteGroup group = close_group(spec.generators());
    const Projectors proj = averaged_projectors(group, k);

    InvariantSubspace out;
    out.k = k;
    out.group = spec.describe();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(proj.plain, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = kRankTolerance * std::max(1.0, sv[0]);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) out.basis_t.push_back(svd.matrixU().col(i));
    }
    out.dimension = static_cast<int>(out.basis_t.size());
    if (k % 2 == 0) {
        const Eigen::VectorXd p = coeff_P_all(k);
        const Eigen::MatrixXcd to_b3 = t_from_phi_matrix(k).entries.transpose();
        for (const auto& t : out.basis_t) {
            const Eigen::VectorXcd scaled = t.cwiseQuotient(p.cast<std::complex<double>>());
            out.basis_scaled_t.push_back(scaled);
            out.basis_b3.push_back(to_b3 * scaled);
        }
    }
    return out;
}

std::vector<ModeB2> lens_modes(int p, int q, int k) {
    if (p < 1 || gcd(p, q) != 1) throw DomainError("lens_modes: gcd(p, q) != 1");
    std::vector<ModeB2> out;
    for (const auto& mode : b2_modes(k)) {
        if (positive_mod(static_cast<long long>(mode.ell()) + static_cast<long long>(q) * mode.m(), p) == 0)
            out.push_back(mode);
    }
    return out;
}

std::vector<Eigen::VectorXcd> prism_modes(int P, int k) {
    if (P < 2) throw DomainError("prism_modes: P must be >= 2");
    std::vector<Eigen::VectorXcd> out;
    if (k < 0 || k % 2 != 0) return out;
    const int dim = (k + 1) * (k + 1);
    const int half = k / 2;
    for (int m1 = -half; m1 <= half; ++m1) {
        for (int m2 = 0; m2 <= half; m2 += P) {
            const double sign = ((m2 + half) % 2 == 0) ? 1.0 : -1.0;
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            const int plus = b2_index(ModeB2::from_doubled(k, 2 * m1, 2 * m2));
            if (m2 == 0) {
                if (sign < 0) continue;
                v[plus] = 1.0;
            } else {
                v[plus] = 1.0;
                v[b2_index(ModeB2::from_doubled(k, 2 * m1, -2 * m2))] = sign;
            }
            out.push_back(v);
        }
    }
    return out;
}

int prism_published_formula(int P, int k) {
    const int ratio = k / (2 * P);
    return k % 2 == 0 ? (k + 1) * (1 + ratio) : (k + 1) * ratio;
}

MultiplicityReport multiplicity(const GroupSpec& spec, int k) {
    if (k < 0) throw DomainError("multiplicity: negative k");
    const FiniteGroup group = close_group(spec.generators());
    MultiplicityReport r;
    r.k = k;
    r.projector_rank = numerical_rank(averaged_projectors(group, k).plain);
    r.multiplicity = r.projector_rank;
    if (const auto* lens = std::get_if<LensSpec>(&spec.variant)) {
        r.closed_form = static_cast<int>(lens_modes(lens->p, lens->q, k).size());
    } else if (const auto* prism = std::get_if<PrismSpec>(&spec.variant)) {
        r.closed_form = static_cast<int>(prism_modes(prism->P, k).size());
        r.published = prism_published_formula(prism->P, k);
        r.published_agrees = *r.published == r.projector_rank;
    }
    if (r.closed_form) r.closed_form_agrees = *r.closed_form == r.projector_rank;
    return r;
}

}  // namespace s3modes
