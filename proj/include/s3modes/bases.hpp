#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "s3modes/quaternion.hpp"
#include "s3modes/toroidal.hpp"

namespace s3modes {

/// Index (k; m1, m2) of a B2 function T_{k;m1,m2}. m1 and m2 run over
/// -k/2 .. k/2 in unit steps (half-integers for odd k) and are stored doubled
/// so every value is an exact integer.
class ModeB2 {
public:
    /// From doubled indices: m1 = two_m1 / 2, m2 = two_m2 / 2.
    static ModeB2 from_doubled(int k, int two_m1, int two_m2);
    /// From real indices; they must be integers or half-integers matching k.
    static ModeB2 from_m(int k, double m1, double m2);
    /// Mode with the given flat index (see b2_index).
    static ModeB2 from_index(int k, int index);

    int k() const { return k_; }
    int two_m1() const { return two_m1_; }
    int two_m2() const { return two_m2_; }
    double m1() const { return two_m1_ / 2.0; }
    double m2() const { return two_m2_ / 2.0; }
    /// l = m1 + m2
    int ell() const { return (two_m1_ + two_m2_) / 2; }
    /// m = m2 - m1
    int m() const { return (two_m2_ - two_m1_) / 2; }
    /// d = k/2 - m2, the Jacobi degree of the canonical form.
    int degree() const;

    bool operator==(const ModeB2&) const = default;

private:
    ModeB2(int k, int two_m1, int two_m2) : k_(k), two_m1_(two_m1), two_m2_(two_m2) {}
    int k_;
    int two_m1_;
    int two_m2_;
};

/// Index (k; I, J) of a B3 function Phi^k_{IJ}; k even, 0 <= I, J <= k.
struct ModeB3 {
    int k = 0;
    int I = 0;
    int J = 0;

    /// Throws DomainError for odd k or out-of-range I, J.
    void validate() const;
    bool operator==(const ModeB3&) const = default;
};

/// Flat index of (m1, m2): (m1 + k/2) (k+1) + (m2 + k/2).
int b2_index(const ModeB2& mode);
/// Flat index of (I, J): I (k+1) + J.
int b3_index(const ModeB3& mode);
/// All B2 modes of level k, ordered by b2_index.
std::vector<ModeB2> b2_modes(int k);
/// All B3 modes of level k, ordered by b3_index.
std::vector<ModeB3> b3_modes(int k);

/// Throws DomainError("B3 defined for even k only") when k is odd or negative.
void require_even_level(int k);

/// C_{k;m1,m2} evaluated at the canonical indices |l|, |m|.
double normalization_constant(const ModeB2& mode);

/// T_{k;m1,m2}(p) = C [cos chi e^{i theta}]^l [sin chi e^{i phi}]^m P^{(m,l)}_d(cos 2 chi),
/// extended to negative l or m through the canonical form with |l|, |m|
/// (and a factor (-1)^m for negative m).
std::complex<double> eval_T(const ModeB2& mode, const ToroidalPoint& p);

/// All T_{k;m1,m2}(p) of level k, ordered by b2_index.
Eigen::VectorXcd eval_T_all(int k, const ToroidalPoint& p);

/// The null vector N_{IJ} = N(I alpha, J alpha), alpha = 2 pi/(k+1).
ComplexQuaternion null_vector_ij(int k, int I, int J);

enum class PhiRoute {
    Cartesian,      ///< (X . N_IJ)^k with the bilinear dot product of C^4.
    Quaternionic,   ///< <n_IJ . q_X>^k through quaternion products.
};

/// Phi^k_{IJ}(p) = (X . N_IJ)^k. Throws DomainError for odd k.
std::complex<double> eval_Phi(const ModeB3& mode, const ToroidalPoint& p,
                              PhiRoute route = PhiRoute::Cartesian);

/// All Phi^k_{IJ}(p) of level k, ordered by b3_index.
Eigen::VectorXcd eval_Phi_all(int k, const ToroidalPoint& p);

/// Coherent-state polynomial [X . N(a, b)]^k.
std::complex<double> eval_Phi_coherent(int k, double a, double b, const ToroidalPoint& p);

/// Coefficient P_{k;m1,m2} of T_{k;m1,m2} in the expansion of
/// [X . N(a,b)]^k = sum P T e^{-ia(m1+m2)} e^{ib(m2-m1)}:
///   P = 2^{-k} pi (k+1)^{-1/2} sqrt(C(k, k/2+m1) C(k, k/2+m2)).
/// Binomials are exact integers. Throws DomainError for odd k.
double coeff_P(const ModeB2& mode);

/// All P_{k;m1,m2} of level k, ordered by b2_index.
Eigen::VectorXd coeff_P_all(int k);

enum class Basis { B2, B3 };
std::string to_string(Basis b);
Basis basis_from_string(const std::string& s);

/// Scaling of the B2 side of a change-of-basis matrix.
enum class B2Scaling {
    Scaled,  ///< script-T = P T, the functions appearing in the B3 transform.
    Plain,   ///< T itself.
};
std::string to_string(B2Scaling s);
B2Scaling b2_scaling_from_string(const std::string& s);

/// Dense change-of-basis matrix. Row r expresses the r-th function of the
/// `to` basis as a combination of the `from` basis functions (column index):
///   to_r = sum_c entries(r, c) from_c.
/// B2 rows/columns follow b2_index, B3 rows/columns follow b3_index.
struct CoeffMatrix {
    int k = 0;
    Basis from = Basis::B3;
    Basis to = Basis::B2;
    B2Scaling scaling = B2Scaling::Scaled;
    Eigen::MatrixXcd entries;
};

/// script-T_{k;m1,m2} = (k+1)^{-2} sum_{I,J} rho^{I(m1+m2) - J(m2-m1)} Phi_IJ.
CoeffMatrix t_from_phi_matrix(int k);

/// Phi_IJ = sum_{m1,m2} script-T_{k;m1,m2} rho^{-I(m1+m2) + J(m2-m1)}.
CoeffMatrix phi_from_t_matrix(int k);

/// Converts the B2 side of a matrix between script-T and plain T.
CoeffMatrix with_b2_scaling(const CoeffMatrix& m, B2Scaling target);

}  // namespace s3modes
