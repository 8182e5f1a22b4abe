#include "qgwa/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qgwa {

namespace {

// ---- integer polynomial helpers (ascending coefficient vectors) ----

std::vector<Integer> poly_mul_z(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division of integer polynomials (remainder known to be zero).
std::vector<Integer> poly_div_z(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Integer> q(dn - dd + 1, Integer(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Integer c = num[k + dd] / den[dd];
        q[k] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    return q;
}

std::mutex g_cyclo_mutex;
std::map<long, std::vector<Integer>> g_cyclo_cache;

std::vector<Integer> cyclotomic_impl(long n) {
    if (auto it = g_cyclo_cache.find(n); it != g_cyclo_cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Integer> num(static_cast<std::size_t>(n) + 1, Integer(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    std::vector<Integer> den{Integer(1)};
    for (long d = 1; d < n; ++d)
        if (n % d == 0) den = poly_mul_z(den, cyclotomic_impl(d));
    auto phi = poly_div_z(std::move(num), den);
    g_cyclo_cache.emplace(n, phi);
    return phi;
}

const std::vector<Integer>& cached_cyclotomic(long n) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    cyclotomic_impl(n);
    return g_cyclo_cache.at(n);
}

// Reduce a rational coefficient vector modulo the monic polynomial phi.
void reduce_mod(std::vector<Rational>& v, const std::vector<Integer>& phi) {
    const std::size_t deg = phi.size() - 1;
    while (v.size() > deg) {
        Rational lead = v.back();
        std::size_t top = v.size() - 1;
        v.pop_back();
        if (lead == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            v[top - deg + j] -= lead * Rational(phi[j]);
    }
    v.resize(deg, Rational(0));
}

}  // namespace

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(long n) {
    if (n < 1) throw ValidationError("cyclotomic_polynomial: n must be >= 1");
    return cached_cyclotomic(n);
}

FieldSpec FieldSpec::cyclotomic(long n) {
    if (n < 1) throw ValidationError("cyclotomic field conductor must be >= 1");
    FieldSpec f;
    f.kind = Kind::Cyclotomic;
    f.n = n;
    return f;
}

long FieldSpec::degree() const {
    return kind == Kind::Rationals ? 1 : euler_phi(n);
}

long FieldSpec::unity_order() const {
    return kind == Kind::Rationals ? 2 : std::lcm(2L, n);
}

std::string FieldSpec::to_string() const {
    if (kind == Kind::Rationals) return "Q";
    return "Q(zeta(" + std::to_string(n) + "))";
}

FieldElement::FieldElement(FieldSpec f, std::vector<Rational> coords)
    : field_(f), coords_(std::move(coords)) {}

FieldElement FieldElement::zero(const FieldSpec& f) {
    return FieldElement(f, std::vector<Rational>(static_cast<std::size_t>(f.degree()), Rational(0)));
}

FieldElement FieldElement::one(const FieldSpec& f) {
    auto e = zero(f);
    e.coords_[0] = 1;
    return e;
}

FieldElement FieldElement::from_rational(const FieldSpec& f, const Rational& r) {
    auto e = zero(f);
    e.coords_[0] = r;
    return e;
}

FieldElement FieldElement::from_long(const FieldSpec& f, long v) {
    return from_rational(f, Rational(v));
}

FieldElement FieldElement::zeta(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Rationals)
        throw ValidationError("zeta: the rational field has no distinguished root of unity");
    auto e = zero(f);
    std::vector<Rational> v(2, Rational(0));
    v[1] = 1;
    reduce_mod(v, cached_cyclotomic(f.n));
    e.coords_ = std::move(v);
    return e;
}

FieldElement FieldElement::root_of_unity(const FieldSpec& f, long m) {
    if (m < 1) throw ValidationError("root_of_unity: order must be >= 1");
    const long L = f.unity_order();
    if (L % m != 0)
        throw ValidationError("zeta(" + std::to_string(m) + ") is not an element of " + f.to_string());
    if (f.kind == FieldSpec::Kind::Rationals)
        return from_long(f, m == 1 ? 1 : -1);
    // Generator of the full torsion subgroup: zeta_n for even n, -zeta_n^{(n+1)/2}
    // (a primitive 2n-th root) for odd n.
    FieldElement gen = (f.n % 2 == 0) ? zeta(f) : -(zeta(f).pow((f.n + 1) / 2));
    return gen.pow(L / m);
}

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

Rational FieldElement::as_rational() const {
    if (!is_rational()) throw ValidationError("as_rational: element is not rational");
    return coords_[0];
}

void FieldElement::check_same_field(const FieldElement& o, const char* op) const {
    if (!(field_ == o.field_)) throw MixedFields(op);
}

FieldElement FieldElement::operator-() const {
    auto e = *this;
    for (auto& c : e.coords_) c = -c;
    return e;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o, "+");
    auto e = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) e.coords_[i] += o.coords_[i];
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o, "-");
    auto e = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) e.coords_[i] -= o.coords_[i];
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o, "*");
    if (field_.kind == FieldSpec::Kind::Rationals)
        return from_rational(field_, coords_[0] * o.coords_[0]);
    std::vector<Rational> prod(2 * coords_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coords_.size(); ++j)
            if (o.coords_[j] != 0) prod[i + j] += coords_[i] * o.coords_[j];
    }
    reduce_mod(prod, cached_cyclotomic(field_.n));
    return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return from_rational(field_, Rational(1) / coords_[0]);
    // Extended Euclid in Q[x]: s*this + t*Phi_n = 1, so s is the inverse.
    const auto& phi_z = cached_cyclotomic(field_.n);
    std::vector<Rational> r0(phi_z.begin(), phi_z.end());
    std::vector<Rational> r1 = coords_;
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r1);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of `this`
    while (true) {
        // r1 has degree >= 1 here (it divides into r0); divide r0 by r1.
        std::vector<Rational> q(r0.size() - r1.size() + 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (std::size_t k = rem.size() - r1.size() + 1; k-- > 0;) {
            Rational c = rem[k + r1.size() - 1] / r1.back();
            q[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
        }
        trim(rem);
        // s_new = s0 - q * s1
        std::vector<Rational> snew = s0;
        snew.resize(std::max(snew.size(), q.size() + s1.size() - 1), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        trim(snew);
        if (rem.empty()) {
            // r1 is the gcd; it must be a nonzero constant since Phi_n is
            // irreducible and `this` is a nonzero element of degree < deg Phi_n.
            Rational g = r1[0];
            std::vector<Rational> inv = s1;
            for (auto& c : inv) c /= g;
            inv.resize(coords_.size(), Rational(0));
            return FieldElement(field_, std::move(inv));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(o, "/");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(field_);
    FieldElement base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
    if (is_zero()) return "0";
    if (is_rational()) return qgwa::to_string(coords_[0]);
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coords_.size(); k-- > 0;) {
        const Rational& c = coords_[k];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        if (k >= 1) {
            mono = "zeta(" + std::to_string(field_.n) + ")";
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) {
            out << qgwa::to_string(abs_c);
        } else if (abs_c == 1) {
            out << mono;
        } else {
            out << qgwa::to_string(abs_c) << "*" << mono;
        }
    }
    return out.str();
}

std::optional<long> order_as_root_of_unity(const FieldElement& e) {
    if (e.is_zero()) throw ZeroElement("order_as_root_of_unity");
    const long L = e.field().unity_order();
    for (long d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        if (e.pow(d).is_one()) return d;
    }
    return std::nullopt;
}

RootSearch root_in_field(const FieldElement& c, long g) {
    if (c.is_zero()) throw ZeroElement("root_in_field");
    if (g < 1) throw ValidationError("root_in_field: g must be >= 1");
    const FieldSpec& f = c.field();
    if (g == 1) return {c, true};
    if (f.degree() == 1) {
        // Rationals (or a degree-1 cyclotomic field, which coincides with it).
        auto r = rational_root(c.as_rational(), g);
        if (!r) return {std::nullopt, true};
        return {FieldElement::from_rational(f, *r), true};
    }
    // Candidates beta = r * zeta_L^t: beta^g = c iff c * zeta_L^{-tg} = r^g is
    // a rational g-th power.
    const long L = f.unity_order();
    const FieldElement zl = FieldElement::root_of_unity(f, L);
    for (long t = 0; t < L; ++t) {
        FieldElement w = c * zl.pow(-t * g);
        if (!w.is_rational()) continue;
        auto r = rational_root(w.as_rational(), g);
        if (!r) continue;
        return {FieldElement::from_rational(f, *r) * zl.pow(t), true};
    }
    // Roots outside the r * zeta^t regime (if any) are undetectable here.
    return {std::nullopt, false};
}

}  // namespace qgwa
