#include "valtree/poly.hpp"

#include <algorithm>
#include <sstream>

namespace valtree {

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly UniPoly::monomial(const Rational& c, int deg) {
    UniPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = c;
    return p;
}

std::optional<int> UniPoly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return std::nullopt;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    UniPoly r;
    if (c.is_zero()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    UniPoly r;
    if (is_zero()) return r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational((long long)i);
    r.trim();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    UniPoly q, r = a;
    int db = b.degree();
    Rational lb = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rational c = r.lc() / lb;
        q += monomial(c, k);
        r -= b.scaled(c).shifted(k);
    }
    return {q, r};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.lc());
}

UniPoly UniPoly::stretch(int k) const {
    UniPoly r;
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::compress(int d) const {
    UniPoly r;
    if (is_zero()) return r;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % d != 0) throw InvariantError("compress: support not divisible");
        r += monomial(c_[i], static_cast<int>(i) / d);
    }
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Germ
// ---------------------------------------------------------------------------

Germ Germ::constant(const Rational& c) { return monomial(c, 0, 0); }

Germ Germ::monomial(const Rational& c, int i, int j) {
    Germ g;
    if (!c.is_zero()) g.t_[{i, j}] = c;
    return g;
}

void Germ::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto key = Key{i, j};
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rational Germ::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

Germ Germ::operator-() const {
    Germ r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

Germ operator+(const Germ& a, const Germ& b) {
    Germ r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
}

Germ operator-(const Germ& a, const Germ& b) { return a + (-b); }

Germ operator*(const Germ& a, const Germ& b) {
    Germ r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Germ Germ::scaled(const Rational& c) const {
    Germ r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_[k] = v * c;
    return r;
}

Germ Germ::pow(unsigned e) const {
    Germ r = constant(Rational(1));
    Germ base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

int Germ::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

std::optional<int> Germ::min_total_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = -1;
    for (const auto& [k, c] : t_) {
        int s = k.first + k.second;
        if (d < 0 || s < d) d = s;
    }
    return d;
}

int Germ::deg_x() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int Germ::deg_y() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

Rational Germ::eval(const Rational& x, const Rational& y) const {
    Rational v(0);
    for (const auto& [k, c] : t_) v += c * x.pow(k.first) * y.pow(k.second);
    return v;
}

Germ Germ::derivative_x() const {
    Germ r;
    for (const auto& [k, c] : t_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
    return r;
}

Germ Germ::derivative_y() const {
    Germ r;
    for (const auto& [k, c] : t_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
    return r;
}

Germ Germ::substitute(const Germ& X, const Germ& Y) const {
    // Powers of X and Y are cached; each term is assembled from the cache.
    std::vector<Germ> xp{Germ::constant(Rational(1))}, yp{Germ::constant(Rational(1))};
    auto power = [](std::vector<Germ>& cache, const Germ& base, int e) -> const Germ& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Germ r;
    for (const auto& [k, c] : t_)
        r += (power(xp, X, k.first) * power(yp, Y, k.second)).scaled(c);
    return r;
}

UniPoly Germ::substitute_t(const UniPoly& X, const UniPoly& Y) const {
    std::vector<UniPoly> xp{UniPoly(Rational(1))}, yp{UniPoly(Rational(1))};
    auto power = [](std::vector<UniPoly>& cache, const UniPoly& base, int e) -> const UniPoly& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    UniPoly r;
    for (const auto& [k, c] : t_)
        r += (power(xp, X, k.first) * power(yp, Y, k.second)).scaled(c);
    return r;
}

Germ Germ::primitive_normalized() const {
    if (is_zero()) return *this;
    // lcm of denominators, then gcd of numerators.
    mpz_class l(1), g(0);
    for (const auto& [k, c] : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& [k, c] : t_) {
        mpz_class n = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = Rational::from_mpz(l) / Rational::from_mpz(g);
    Germ r = scaled(scale);
    // Sign: graded-lex leading term (max total degree, then max x exponent)
    // gets a positive coefficient.
    Key lead{-1, -1};
    for (const auto& [k, c] : r.t_) {
        int d = k.first + k.second, dl = lead.first + lead.second;
        if (lead.first < 0 || d > dl || (d == dl && k.first > lead.first)) lead = k;
    }
    if (r.t_.at(lead).sign() < 0) r = -r;
    return r;
}

std::vector<UniPoly> germ_as_y_poly(const Germ& g) {
    std::vector<UniPoly> v(static_cast<std::size_t>(std::max(0, g.deg_y() + 1)));
    for (const auto& [k, c] : g.terms())
        v[k.second] += UniPoly::monomial(c, k.first);
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

Germ germ_from_y_poly(const std::vector<UniPoly>& v) {
    Germ g;
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t i = 0; i < v[j].coeffs().size(); ++i)
            g.add_term(static_cast<int>(i), static_cast<int>(j), v[j].coeff(static_cast<int>(i)));
    return g;
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero() || den_.coeff(0).is_zero())
        throw InvariantError("RatFunc: denominator vanishes at 0");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::divrem(num_, g).first;
        den_ = UniPoly::divrem(den_, g).first;
    }
    Rational d0 = den_.coeff(0);
    num_ = num_.scaled(Rational(1) / d0);
    den_ = den_.scaled(Rational(1) / d0);
}

Rational RatFunc::at0() const { return num_.coeff(0) / den_.coeff(0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("RatFunc division by zero");
    // Shift common t powers out so the quotient stays regular at 0.
    int ob = *b.num_.ord();
    int oa = a.num_.ord().value_or(ob);
    if (oa < ob) throw InvariantError("RatFunc: quotient has a pole at 0");
    UniPoly na = a.num_, nb = b.num_;
    if (ob > 0) {
        std::vector<Rational> ca(na.coeffs().begin() + ob, na.coeffs().end());
        std::vector<Rational> cb(nb.coeffs().begin() + ob, nb.coeffs().end());
        na = a.is_zero() ? UniPoly() : UniPoly(std::move(ca));
        nb = UniPoly(std::move(cb));
    }
    return RatFunc(na * b.den_, nb * a.den_);
}

}  // namespace valtree
