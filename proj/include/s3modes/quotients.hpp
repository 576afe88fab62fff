#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "s3modes/bases.hpp"
#include "s3modes/rotation.hpp"

namespace s3modes {

struct LensSpec {
    int p = 1;
    int q = 1;
};
struct PrismSpec {
    int P = 2;
};
struct CustomSpec {
    std::vector<Rotation> generators;
};

/// Holonomy group description: lens L(p, q), prism of order 4P, or explicit
/// generators.
struct GroupSpec {
    std::variant<LensSpec, PrismSpec, CustomSpec> variant;

    static GroupSpec lens(int p, int q);
    static GroupSpec prism(int P);
    static GroupSpec custom(std::vector<Rotation> generators);

    /// Throws DomainError when lens parameters violate 0 < q < p, gcd = 1,
    /// or prism has P < 2.
    void validate() const;
    std::vector<Rotation> generators() const;
    std::string describe() const;
};

/// Parses "lens:p,q", "prism:P", or the path of a JSON file
/// {"generators": [{"q_left": [..4..], "q_right": [..4..]}, ...]}.
GroupSpec parse_group_spec(const std::string& text);

/// Rotation theta -> theta + 2 pi/p, phi -> phi + 2 pi q/p:
/// L = w1 w2, R = w1 / w2, w_i = cos(psi_i/2) + j3 sin(psi_i/2).
Rotation lens_rotation(int p, int q);

/// Rotation acting as theta -> theta + psi1, phi -> phi + psi2.
Rotation toroidal_rotation(double psi1, double psi2);

/// The two single-action generators of the binary dihedral group of order
/// 4P: (w^2, 1) with psi1 = psi2 = pi/P, and (-j1, 1).
std::pair<Rotation, Rotation> prism_generators(int P);

struct FiniteGroup {
    std::vector<Rotation> elements;
    int order() const { return static_cast<int>(elements.size()); }
};

/// Breadth-first closure under rotation_compose, deduplicating the sign
/// ambiguity. Throws NumericalError when more than max_order elements appear.
FiniteGroup close_group(const std::vector<Rotation>& generators, int max_order = 1000);

/// Group-averaged projector (1/|G|) sum_g operator(R_g).
/// Even k: B3 coefficient columns (g_coeffs route). Odd k: plain-T
/// coefficient columns (b2_rotation_matrix route).
Eigen::MatrixXcd invariant_projector(const FiniteGroup& group, int k);

/// The projector in plain-T coordinates (an orthogonal projector), any k.
Eigen::MatrixXcd invariant_projector_b2(const FiniteGroup& group, int k);

inline constexpr double kRankTolerance = 1e-6;

/// Number of singular values above tol * max(1, sigma_max).
int numerical_rank(const Eigen::MatrixXcd& m, double tol = kRankTolerance);

struct InvariantSubspace {
    int k = 0;
    std::string group;
    int dimension = 0;
    /// Orthonormal basis in plain-T coordinates (b2_index order).
    std::vector<Eigen::VectorXcd> basis_t;
    /// The same functions on script-T = P T; empty for odd k.
    std::vector<Eigen::VectorXcd> basis_scaled_t;
    /// The same functions on B3; empty for odd k.
    std::vector<Eigen::VectorXcd> basis_b3;
};

InvariantSubspace invariant_subspace(const GroupSpec& spec, int k);

/// B2 modes satisfying m1 + m2 + q (m2 - m1) = 0 mod p.
std::vector<ModeB2> lens_modes(int p, int q, int k);

/// script-T coordinate vectors T_{m1,m2} + (-1)^{m2+k/2} T_{m1,-m2} for
/// m2 >= 0, m2 = 0 mod P, every m1; the m2 = 0 vectors are kept when
/// (-1)^{k/2} = +1. Empty for odd k.
std::vector<Eigen::VectorXcd> prism_modes(int P, int k);

/// (k+1)(1 + floor(k/2P)) for even k, (k+1) floor(k/2P) for odd k, as
/// published for prism spaces.
int prism_published_formula(int P, int k);

struct MultiplicityReport {
    int k = 0;
    int multiplicity = 0;            ///< projector rank, authoritative
    int projector_rank = 0;
    std::optional<int> closed_form;  ///< lens condition count / prism construction count
    std::optional<int> published;    ///< prism printed formula, informational
    bool closed_form_agrees = true;
    bool published_agrees = true;
};

MultiplicityReport multiplicity(const GroupSpec& spec, int k);

}  // namespace s3modes
