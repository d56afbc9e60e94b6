// rational.hpp
// Exact rational arithmetic (GMP-backed). All quantities in the library
// (valuation values, skewness, thinness, masses) are of this type; nothing
// in the pipeline ever touches floating point.
#ifndef VALTREE_RATIONAL_HPP
#define VALTREE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace valtree {

// Thrown on bad user input (exit code 3 in the CLI).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal cross-check fails (exit code 4 in the CLI).
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(long long n, long long d) : q_(static_cast<long>(n), static_cast<long>(d)) {
        if (d == 0) throw DomainError("zero denominator");
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational from_mpz(const mpz_class& n) { return Rational(mpq_class(n)); }

    // Accepts "p", "-p", "p/q". Returns nullopt on malformed input.
    static std::optional<Rational> parse(const std::string& s);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    long long num_ll() const {
        if (!q_.get_num().fits_slong_p()) throw DomainError("numerator overflow");
        return q_.get_num().get_si();
    }
    long long den_ll() const {
        if (!q_.get_den().fits_slong_p()) throw DomainError("denominator overflow");
        return q_.get_den().get_si();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // Exact integer power, exp >= 0.
    Rational pow(unsigned exp) const {
        Rational r(1), base = *this;
        while (exp) {
            if (exp & 1) r *= base;
            base *= base;
            exp >>= 1;
        }
        return r;
    }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return f;
    }

    // Canonical form: "p/q" for non-integers, "p" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

inline std::optional<Rational> Rational::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t slash = s.find('/');
    auto is_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(s, true)) return std::nullopt;
            return Rational(mpq_class(mpz_class(s)));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!is_int(n, true) || !is_int(d, false)) return std::nullopt;
        mpz_class dz(d);
        if (dz == 0) return std::nullopt;
        mpq_class q(mpz_class(n), dz);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (...) {
        return std::nullopt;
    }
}

// Exact value or +infinity; the flag used throughout for curve-valuation
// blowups of the form nu_C(psi) with psi vanishing on C.
class ExtRational {
public:
    ExtRational() : inf_(true) {}
    ExtRational(Rational v) : inf_(false), v_(std::move(v)) {}
    static ExtRational infinity() { return ExtRational(); }

    bool is_inf() const { return inf_; }
    const Rational& value() const {
        if (inf_) throw DomainError("infinite value");
        return v_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) {
        return a == b || a < b;
    }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.v_ + b.v_);
    }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

private:
    bool inf_;
    Rational v_;
};

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }

}  // namespace valtree

#endif
