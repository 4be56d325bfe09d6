#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace meshfree {

/// Multivariate monomial basis over R^d (d <= 3), ordered graded-lexicographically:
/// ascending total degree, and within a degree descending powers of the first axes,
/// e.g. in 2D: 1, x, y, x^2, xy, y^2, ...
struct MonomialBasis {
    int dim = 0;
    int degree = -1;  // max total degree; -1 for a custom exponent set
    std::vector<std::array<int, 3>> exponents;

    /// All monomials with total degree <= `degree`; size() == C(degree+dim, dim).
    static MonomialBasis total_degree(int dim, int degree);
    /// Custom exponent set (used e.g. for classical stencil checks).
    static MonomialBasis from_exponents(int dim, std::vector<std::array<int, 3>> exps);

    int size() const { return static_cast<int>(exponents.size()); }

    void eval(std::span<const double> x, std::span<double> out) const;
    void laplacian(std::span<const double> x, std::span<double> out) const;
};

/// Number of monomials in d variables with total degree <= m: C(m+d, d).
long long monomial_count(int m, int d);

Eigen::VectorXd eval_monomials(std::span<const double> x, const MonomialBasis& basis);
Eigen::VectorXd laplacian_monomials(std::span<const double> x, const MonomialBasis& basis);

/// Polyharmonic spline r^k (odd k) or r^k log r (even k).
struct PhsSpec {
    int k = 3;
};

/// phi(r); the r = 0 value is the continuous limit 0 for every k >= 1.
double phs_eval(double r, PhsSpec spec);

/// Laplacian of phi(||x||) in `dim` dimensions evaluated at radius r:
///   odd k:  k (k+d-2) r^(k-2)
///   even k: r^(k-2) [ k (k+d-2) log r + (2k+d-2) ]
/// At r = 0 the limit is 0 for k >= 3; k < 3 is singular there and throws.
double phs_laplacian(double r, PhsSpec spec, int dim);

}  // namespace meshfree
