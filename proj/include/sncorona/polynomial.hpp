// polynomial.hpp - exact univariate polynomials and rational functions in t.
#pragma once

#include <sncorona/error.hpp>
#include <sncorona/exact.hpp>

#include <cstddef>
#include <ostream>
#include <regex>
#include <string>
#include <utility>
#include <vector>

namespace sncorona {

/// Polynomial with exact rational coefficients, stored in ascending degree
/// with no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { normalize(); }
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial t() { return Polynomial({Rational(0), Rational(1)}); }
    /// t - root
    static Polynomial linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial p = *this;
        const Rational lead = leading();
        for (auto& x : p.c_) x /= lead;
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    Polynomial pow(std::size_t e) const {
        Polynomial result = constant(1), base = *this;
        while (e) {
            if (e & 1U) result = result * base;
            base = base * base;
            e >>= 1U;
        }
        return result;
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw Error(ErrorCode::InexactDivision, "polynomial division by zero");
        Polynomial rem = a;
        if (a.degree() < b.degree()) return {Polynomial{}, rem};
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        const Rational lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const Rational f = rem.leading() / lead;
            q[shift] = f;
            for (std::size_t k = 0; k < b.c_.size(); ++k) rem.c_[k + shift] -= f * b.c_[k];
            rem.normalize();
        }
        return {Polynomial(std::move(q)), rem};
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "c0 + c1*t + ... + ck*t^k", every coefficient written, exact "p/q".
    friend std::ostream& operator<<(std::ostream& out, const Polynomial& p) {
        if (p.is_zero()) return out << '0';
        for (std::size_t k = 0; k < p.c_.size(); ++k) {
            if (k) out << " + ";
            out << to_string(p.c_[k]);
            if (k == 1) out << "*t";
            else if (k > 1) out << "*t^" << k;
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline std::string to_string(const Polynomial& p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

/// Inverse of the printed form. Terms may appear in any order; repeated
/// powers accumulate.
inline Polynomial parse_polynomial(const std::string& text) {
    static const std::regex term(R"(^\s*([+-]?\d+(?:/\d+)?)(\*t(?:\^(\d+))?)?\s*$)");
    std::vector<Rational> c;
    std::size_t start = 0;
    const std::string trimmed = text;
    while (start <= trimmed.size()) {
        auto plus = trimmed.find(" + ", start);
        const std::string piece = trimmed.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        std::smatch m;
        if (!std::regex_match(piece, m, term)) {
            throw Error(ErrorCode::ParseError, "bad polynomial term '" + piece + "'");
        }
        std::size_t power = 0;
        if (m[2].matched) power = m[3].matched ? std::stoul(m[3].str()) : 1;
        if (c.size() <= power) c.resize(power + 1);
        c[power] += parse_rational(m[1].str());
        if (plus == std::string::npos) break;
        start = plus + 3;
    }
    return Polynomial(std::move(c));
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// numerator / denominator, kept GCD-reduced with a monic denominator so
/// that equal functions have identical representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorCode::InexactDivision, "rational function with zero denominator");
        reduce();
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    Rational operator()(const Rational& x) const {
        const Rational d = den_(x);
        if (d == 0) throw Error(ErrorCode::PoleAtEvaluationPoint, "pole at t = " + to_string(x));
        return num_(x) / d;
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    friend std::ostream& operator<<(std::ostream& out, const RationalFunction& f) {
        return out << '(' << f.num_ << ") / (" << f.den_ << ')';
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        const Polynomial g = gcd(num_, den_);
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
        const Rational lead = den_.leading();
        num_ *= Rational(1) / lead;
        den_ *= Rational(1) / lead;
    }

    Polynomial num_;
    Polynomial den_;
};

inline std::string to_string(const RationalFunction& f) {
    std::ostringstream out;
    out << f;
    return out.str();
}

}  // namespace sncorona
