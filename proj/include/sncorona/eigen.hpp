// eigen.hpp - cyclic Jacobi eigensolver for real symmetric matrices and
// tolerance-aware eigenvalue multisets.
#pragma once

#include <sncorona/error.hpp>
#include <sncorona/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sncorona {

inline constexpr double default_cluster_tol = 1e-6;

struct Eigenvalue {
    double value;
    std::size_t multiplicity;

    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Sorted (value, multiplicity) pairs with strictly increasing values.
class SpectrumMultiset {
public:
    SpectrumMultiset() = default;
    explicit SpectrumMultiset(std::vector<Eigenvalue> entries) : entries_(std::move(entries)) {}

    const std::vector<Eigenvalue>& entries() const noexcept { return entries_; }
    std::size_t distinct() const noexcept { return entries_.size(); }

    std::size_t total() const noexcept {
        std::size_t t = 0;
        for (const auto& e : entries_) t += e.multiplicity;
        return t;
    }

    /// Every eigenvalue repeated by its multiplicity, ascending.
    std::vector<double> expanded() const {
        std::vector<double> out;
        out.reserve(total());
        for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
        return out;
    }

    /// Multiplicity of the cluster within tol of x, or 0.
    std::size_t multiplicity_of(double x, double tol = default_cluster_tol) const {
        for (const auto& e : entries_)
            if (std::abs(e.value - x) < tol) return e.multiplicity;
        return 0;
    }

private:
    std::vector<Eigenvalue> entries_;
};

/// Groups raw eigenvalues: consecutive sorted values join a cluster while
/// their gap, divided by 1 + max|value|, stays below tol. The representative
/// is the cluster mean, snapped to 0 when it lies within the scaled tol.
inline SpectrumMultiset cluster(std::vector<double> values, double tol = default_cluster_tol) {
    std::sort(values.begin(), values.end());
    double radius = 0.0;
    for (double v : values) radius = std::max(radius, std::abs(v));
    const double scale = 1.0 + radius;
    std::vector<Eigenvalue> out;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        while (j < values.size() && (values[j] - values[j - 1]) / scale < tol) ++j;
        double sum = 0.0;
        for (std::size_t k = i; k < j; ++k) sum += values[k];
        double mean = sum / static_cast<double>(j - i);
        if (std::abs(mean) / scale < tol) mean = 0.0;
        out.push_back({mean, j - i});
        i = j;
    }
    return SpectrumMultiset(std::move(out));
}

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// 1e-12 (1 + ||M||_F).
inline std::vector<double> jacobi_eigenvalues(RealMatrix a) {
    require_square(a, "sym_eigenvalues");
    const std::size_t n = a.rows();
    double max_abs = 0.0, frob = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::abs(a(i, j)));
            frob += a(i, j) * a(i, j);
        }
    frob = std::sqrt(frob);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12 * (1.0 + max_abs)) {
                throw Error(ErrorCode::NotSymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) +
                                                         ") and transpose differ");
            }

    const double target = 1e-12 * (1.0 + frob);
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_norm() >= target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
    std::sort(out.begin(), out.end());
    return out;
}

inline SpectrumMultiset sym_eigenvalues(const RealMatrix& m, double tol = default_cluster_tol) {
    if (m.rows() == 0) throw Error(ErrorCode::NotSquare, "sym_eigenvalues: empty matrix");
    return cluster(jacobi_eigenvalues(m), tol);
}

inline SpectrumMultiset sym_eigenvalues(const IntMatrix& m, double tol = default_cluster_tol) {
    return sym_eigenvalues(to_real(m), tol);
}

/// Equal total multiplicity and entrywise agreement (< tol) after expanding
/// both multisets into sorted sequences.
inline bool spectra_equal(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol) {
    const auto x = a.expanded();
    const auto y = b.expanded();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(std::abs(x[i] - y[i]) < tol)) return false;
    return true;
}

/// Largest entrywise gap between the expanded multisets; infinity when the
/// sizes differ.
inline double spectra_distance(const SpectrumMultiset& a, const SpectrumMultiset& b) {
    const auto x = a.expanded();
    const auto y = b.expanded();
    if (x.size() != y.size()) return INFINITY;
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

/// "-1.41421 x2, 1.41421 x2"
inline std::string format_spectrum(const SpectrumMultiset& s, int precision = 6) {
    std::ostringstream out;
    out.precision(precision);
    bool first = true;
    for (const auto& e : s.entries()) {
        if (!first) out << ", ";
        first = false;
        out << e.value << " x" << e.multiplicity;
    }
    return out.str();
}

}  // namespace sncorona
