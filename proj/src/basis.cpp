#include "meshfree/basis.hpp"

#include <cmath>

#include "meshfree/errors.hpp"

namespace meshfree {

namespace {

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

long long monomial_count(int m, int d) {
    if (m < 0 || d < 1) throw Error("monomial_count: need m >= 0 and d >= 1");
    long long c = 1;
    for (int i = 1; i <= d; ++i) c = c * (m + i) / i;  // C(m+d, d), exact at each step
    return c;
}

MonomialBasis MonomialBasis::total_degree(int dim, int degree) {
    if (dim < 1 || dim > 3) throw Error("MonomialBasis: dim must be 1, 2 or 3");
    if (degree < 0) throw Error("MonomialBasis: degree must be >= 0");
    MonomialBasis b;
    b.dim = dim;
    b.degree = degree;
    for (int q = 0; q <= degree; ++q) {
        if (dim == 1) {
            b.exponents.push_back({q, 0, 0});
        } else if (dim == 2) {
            for (int a0 = q; a0 >= 0; --a0) b.exponents.push_back({a0, q - a0, 0});
        } else {
            for (int a0 = q; a0 >= 0; --a0)
                for (int a1 = q - a0; a1 >= 0; --a1)
                    b.exponents.push_back({a0, a1, q - a0 - a1});
        }
    }
    return b;
}

MonomialBasis MonomialBasis::from_exponents(int dim, std::vector<std::array<int, 3>> exps) {
    if (dim < 1 || dim > 3) throw Error("MonomialBasis: dim must be 1, 2 or 3");
    MonomialBasis b;
    b.dim = dim;
    b.degree = -1;
    b.exponents = std::move(exps);
    for (const auto& a : b.exponents)
        for (int c = dim; c < 3; ++c)
            if (a[c] != 0) throw Error("MonomialBasis: exponent uses axis beyond dim");
    return b;
}

void MonomialBasis::eval(std::span<const double> x, std::span<double> out) const {
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        const auto& a = exponents[j];
        double v = 1.0;
        for (int c = 0; c < dim; ++c) v *= ipow(x[c], a[c]);
        out[j] = v;
    }
}

void MonomialBasis::laplacian(std::span<const double> x, std::span<double> out) const {
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        const auto& a = exponents[j];
        double sum = 0.0;
        for (int c = 0; c < dim; ++c) {
            if (a[c] < 2) continue;
            double term = static_cast<double>(a[c]) * (a[c] - 1) * ipow(x[c], a[c] - 2);
            for (int c2 = 0; c2 < dim; ++c2)
                if (c2 != c) term *= ipow(x[c2], a[c2]);
            sum += term;
        }
        out[j] = sum;
    }
}

Eigen::VectorXd eval_monomials(std::span<const double> x, const MonomialBasis& basis) {
    Eigen::VectorXd out(basis.size());
    basis.eval(x, {out.data(), static_cast<std::size_t>(out.size())});
    return out;
}

Eigen::VectorXd laplacian_monomials(std::span<const double> x, const MonomialBasis& basis) {
    Eigen::VectorXd out(basis.size());
    basis.laplacian(x, {out.data(), static_cast<std::size_t>(out.size())});
    return out;
}

double phs_eval(double r, PhsSpec spec) {
    if (spec.k < 1) throw Error("phs_eval: k must be >= 1");
    if (r < 0.0) throw Error("phs_eval: r must be >= 0");
    if (r == 0.0) return 0.0;  // limit value, also avoids 0 * log 0
    double rk = ipow(r, spec.k);
    return (spec.k % 2 == 1) ? rk : rk * std::log(r);
}

double phs_laplacian(double r, PhsSpec spec, int dim) {
    if (spec.k < 1) throw Error("phs_laplacian: k must be >= 1");
    if (dim < 2) throw Error("phs_laplacian: dim must be >= 2");
    if (r < 0.0) throw Error("phs_laplacian: r must be >= 0");
    const int k = spec.k;
    if (r == 0.0) {
        if (k < 3) throw Error("phs_laplacian: singular at r = 0 for k < 3");
        return 0.0;
    }
    if (k % 2 == 1) return k * (k + dim - 2) * ipow(r, k - 2);
    return ipow(r, k - 2) * (k * (k + dim - 2) * std::log(r) + (2 * k + dim - 2));
}

}  // namespace meshfree
