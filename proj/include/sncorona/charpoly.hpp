// charpoly.hpp - exact characteristic polynomials, determinants and coronals.
#pragma once

#include <sncorona/error.hpp>
#include <sncorona/exact.hpp>
#include <sncorona/matrix.hpp>
#include <sncorona/polynomial.hpp>

#include <utility>
#include <vector>

namespace sncorona {

/// psi_M(t) = det(tI - M) by the Faddeev-LeVerrier recurrence
///   M_k = M M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(M M_k) / k.
/// For integer M every M_k is integral, so the recurrence runs over
/// integers; each division by k is checked to be exact.
inline Polynomial char_poly_exact(const IntMatrix& m) {
    require_square(m, "char_poly_exact");
    const std::size_t n = m.rows();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    IntMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = m * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        const Integer tr = (m * mk).trace();
        if (tr % k != 0) {
            throw Error(ErrorCode::InexactDivision, "Faddeev-LeVerrier trace " + tr.str() + " not divisible by " +
                                                        std::to_string(k));
        }
        c[n - k] = -tr / k;
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(n + 1);
    for (auto& x : c) coeffs.emplace_back(x);
    return Polynomial(std::move(coeffs));
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
inline Integer det_bareiss(IntMatrix a) {
    require_square(a, "det_bareiss");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Sylvester's identity guarantees exactness.
                a(i, j) = num / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// det(t0 I - M) for rational t0 = a/b, as det(aI - bM) / b^n.
inline Rational det_exact_at(const IntMatrix& m, const Rational& t0) {
    require_square(m, "det_exact_at");
    const std::size_t n = m.rows();
    const Integer a = numerator(t0);
    const Integer b = denominator(t0);
    IntMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = (i == j ? a : Integer(0)) - b * m(i, j);
    Integer bn = 1;
    for (std::size_t i = 0; i < n; ++i) bn *= b;
    return Rational(det_bareiss(std::move(x)), bn);
}

/// Determinant over the rationals by Gaussian elimination.
inline Rational det_rational(RationalMatrix a) {
    require_square(a, "det_rational");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

/// Coronal j^T (tI - M)^{-1} j. By the matrix determinant lemma
///   det(tI - M + J) = psi_M(t) (1 + coronal),
/// so coronal = (psi_{M-J}(t) - psi_M(t)) / psi_M(t), reduced.
inline RationalFunction coronal(const IntMatrix& m) {
    require_square(m, "coronal");
    const Polynomial psi = char_poly_exact(m);
    const Polynomial psi_shift = char_poly_exact(m - IntMatrix::ones(m.rows(), m.cols()));
    return RationalFunction(psi_shift - psi, psi);
}

/// Coronal of an order-n matrix whose rows all sum to k: n / (t - k).
inline RationalFunction coronal_constant_row_sum(std::size_t n, const Rational& k) {
    return RationalFunction(Polynomial::constant(Rational(static_cast<long long>(n))), Polynomial::linear_factor(k));
}

}  // namespace sncorona
