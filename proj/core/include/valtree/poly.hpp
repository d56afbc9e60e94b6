// poly.hpp
// Dense univariate polynomials, sparse bivariate germs, and rational
// functions regular at 0 (used when lifting parametrizations through
// blowup charts).
#ifndef VALTREE_POLY_HPP
#define VALTREE_POLY_HPP

#include "valtree/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace valtree {

// ---------------------------------------------------------------------------
// UniPoly: element of Q[t], dense coefficient vector, no trailing zeros.
// ---------------------------------------------------------------------------
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const Rational& c, int deg);
    static UniPoly variable() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    // t-adic order; nullopt for the zero polynomial.
    std::optional<int> ord() const;

    const Rational& coeff(int i) const {
        static const Rational zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[i];
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const Rational& c) const;
    UniPoly shifted(int k) const;  // multiply by t^k, k >= 0
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;

    // Division in Q[t]; divisor nonzero.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    // Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);

    // Substitute t -> t^k (k >= 1) or t -> t/k effects are handled by callers;
    // this maps exponents i -> i*k.
    UniPoly stretch(int k) const;
    // Keep only exponents divisible by d, dividing them by d. Caller
    // guarantees the support is d-divisible.
    UniPoly compress(int d) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Germ: element of Q[x,y], sparse exponent map. The zero germ is the empty
// map; no zero coefficients are stored.
// ---------------------------------------------------------------------------
class Germ {
public:
    using Key = std::pair<int, int>;  // (x exponent, y exponent)

    Germ() = default;
    static Germ constant(const Rational& c);
    static Germ monomial(const Rational& c, int i, int j);
    static Germ var_x() { return monomial(Rational(1), 1, 0); }
    static Germ var_y() { return monomial(Rational(1), 0, 1); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rational>& terms() const { return t_; }

    void add_term(int i, int j, const Rational& c);
    Rational coeff(int i, int j) const;

    Germ operator-() const;
    friend Germ operator+(const Germ& a, const Germ& b);
    friend Germ operator-(const Germ& a, const Germ& b);
    friend Germ operator*(const Germ& a, const Germ& b);
    Germ& operator+=(const Germ& o) { *this = *this + o; return *this; }
    Germ& operator-=(const Germ& o) { *this = *this - o; return *this; }
    Germ& operator*=(const Germ& o) { *this = *this * o; return *this; }
    friend bool operator==(const Germ& a, const Germ& b) { return a.t_ == b.t_; }

    Germ scaled(const Rational& c) const;
    Germ pow(unsigned e) const;

    int total_degree() const;            // -1 for zero
    // Minimal total degree over the support; nullopt for zero. This is the
    // multiplicity m(psi) once psi is in the maximal ideal.
    std::optional<int> min_total_degree() const;
    int deg_x() const;
    int deg_y() const;

    bool vanishes_at_origin() const { return coeff(0, 0).is_zero(); }

    Rational eval(const Rational& x, const Rational& y) const;
    Germ derivative_x() const;
    Germ derivative_y() const;

    // psi(X(x,y), Y(x,y)).
    Germ substitute(const Germ& X, const Germ& Y) const;
    // psi(X(t), Y(t)).
    UniPoly substitute_t(const UniPoly& X, const UniPoly& Y) const;

    // Scale so that integer coefficients are coprime and the graded-lex
    // leading coefficient is positive. Used to normalize implicit equations.
    Germ primitive_normalized() const;

private:
    std::map<Key, Rational> t_;
};

// Views of a germ as an element of (Q[x])[y]: index = y-degree.
std::vector<UniPoly> germ_as_y_poly(const Germ& g);
Germ germ_from_y_poly(const std::vector<UniPoly>& v);

// ---------------------------------------------------------------------------
// RatFunc: p(t)/q(t) with q(0) != 0, i.e. a rational function regular at
// t = 0. Closed under the chart arithmetic used by strict-transform lifts.
// ---------------------------------------------------------------------------
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(UniPoly num, UniPoly den);
    static RatFunc from_poly(UniPoly p) { return RatFunc(std::move(p), UniPoly(Rational(1))); }
    static RatFunc constant(const Rational& c) { return from_poly(UniPoly(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    // ord_t; nullopt for zero.
    std::optional<int> ord() const { return num_.ord(); }
    // Value at t=0 (requires ord >= 0, which holds by construction).
    Rational at0() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    // a/b requires ord(b) <= ord(a) so the result is regular at 0.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc((-num_), den_); }

private:
    void reduce();
    UniPoly num_, den_;
};

}  // namespace valtree

#endif
