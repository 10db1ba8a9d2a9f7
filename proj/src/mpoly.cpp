#include "psval/mpoly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace psval {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i, int64_t power) {
    assert(i < nvars);
    ExpVec e(nvars, 0);
    e[i] = power;
    return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(std::size_t nvars, const ExpVec& e, const Rational& c) {
    assert(e.size() == nvars);
    MPoly p(nvars);
    p.add_term(e, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           exp_nonneg(terms_.begin()->first);
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

int64_t MPoly::total_deg() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

int64_t MPoly::deg_in(std::size_t var) const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    assert(nvars_ == o.nvars_);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    assert(nvars_ == o.nvars_);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    assert(nvars_ == o.nvars_);
    MPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

const ExpVec& MPoly::lead_exp() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& MPoly::lead_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

MPoly MPoly::derivative(std::size_t var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    assert(point.size() == nvars_);
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] < 0) throw std::domain_error("eval on Laurent exponent");
            for (int64_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    MPoly q(nvars_);
    MPoly r = *this;
    while (!r.is_zero()) {
        ExpVec d = exp_sub(r.lead_exp(), o.lead_exp());
        if (!exp_nonneg(d)) return std::nullopt;
        Rational c = r.lead_coeff() / o.lead_coeff();
        MPoly t = MPoly::monomial(nvars_, d, c);
        q = q + t;
        r = r - t * o;
    }
    return q;
}

std::optional<MPoly> MPoly::sqrt_exact() const {
    if (is_zero()) return MPoly(nvars_);
    if (is_constant()) {
        auto s = exact_sqrt(constant_value());
        if (!s) return std::nullopt;
        return MPoly::constant(nvars_, *s);
    }
    if (total_deg() % 2 != 0) return std::nullopt;
    std::size_t v = 0;
    while (v < nvars_ && deg_in(v) <= 0) ++v;
    if (v == nvars_) return std::nullopt;
    int64_t d = deg_in(v);
    if (d % 2 != 0) return std::nullopt;
    int64_t h = d / 2;

    // coefficients of this as a polynomial in x_v
    std::vector<MPoly> c(static_cast<std::size_t>(d) + 1, MPoly(nvars_));
    for (const auto& [e, k] : terms_) {
        ExpVec rest = e;
        int64_t dv = rest[v];
        rest[v] = 0;
        c[static_cast<std::size_t>(dv)].add_term(rest, k);
    }
    std::vector<MPoly> s(static_cast<std::size_t>(h) + 1, MPoly(nvars_));
    auto top = c[static_cast<std::size_t>(d)].sqrt_exact();
    if (!top) return std::nullopt;
    s[static_cast<std::size_t>(h)] = *top;
    MPoly twice_top = *top * Rational(2);
    for (int64_t i = h - 1; i >= 0; --i) {
        MPoly rhs = c[static_cast<std::size_t>(i + h)];
        for (int64_t j = i + 1; j <= h - 1; ++j) {
            int64_t k = i + h - j;
            if (k <= h - 1 && k > j) rhs = rhs - s[(std::size_t)j] * s[(std::size_t)k] * Rational(2);
            if (k == j) rhs = rhs - s[(std::size_t)j] * s[(std::size_t)k];
        }
        auto si = rhs.divide_exact(twice_top);
        if (!si) return std::nullopt;
        s[static_cast<std::size_t>(i)] = *si;
    }
    MPoly root(nvars_);
    for (int64_t i = 0; i <= h; ++i) {
        MPoly xi = MPoly::variable(nvars_, v, i);
        if (i == 0) xi = MPoly::constant(nvars_, 1);
        root = root + s[static_cast<std::size_t>(i)] * xi;
    }
    if (root * root != *this) return std::nullopt;
    return root;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // display in descending graded-lex order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = total_degree(e) != 0 || !exp_nonneg(e);
        bool coeff_shown = !any_var || a != 1;
        if (coeff_shown) os << to_string(a);
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << names[i];
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

// polynomial viewed along one variable: coefficient list indexed by degree
std::vector<MPoly> univ_coeffs(const MPoly& p, std::size_t v) {
    int64_t d = p.deg_in(v);
    std::vector<MPoly> c(static_cast<std::size_t>(std::max<int64_t>(d, 0)) + 1,
                         MPoly(p.nvars()));
    for (const auto& [e, k] : p.terms()) {
        ExpVec rest = e;
        int64_t dv = rest[v];
        rest[v] = 0;
        c[static_cast<std::size_t>(dv)].add_term(rest, k);
    }
    return c;
}

MPoly lead_coeff_in(const MPoly& p, std::size_t v) {
    auto c = univ_coeffs(p, v);
    return c.back();
}

// pseudo-remainder of a by b along variable v (b nonzero with deg_v(b) >= 1)
MPoly prem(MPoly a, const MPoly& b, std::size_t v) {
    int64_t db = b.deg_in(v);
    MPoly lb = lead_coeff_in(b, v);
    while (!a.is_zero() && a.deg_in(v) >= db) {
        int64_t da = a.deg_in(v);
        MPoly la = lead_coeff_in(a, v);
        MPoly shift = MPoly::variable(a.nvars(), v, da - db);
        if (da == db) shift = MPoly::constant(a.nvars(), 1);
        a = a * lb - la * shift * b;
    }
    return a;
}

MPoly normalize_lc(const MPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.lead_coeff());
}

// gcd of the coefficients of p along v (the content), recursive
MPoly content_in(const MPoly& p, std::size_t v) {
    auto cs = univ_coeffs(p, v);
    MPoly g(p.nvars());
    for (const auto& c : cs) g = mpoly_gcd(g, c);
    return g;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalize_lc(b);
    if (b.is_zero()) return normalize_lc(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.nvars(), 1);

    std::size_t v = 0;
    while (v < a.nvars() && a.deg_in(v) <= 0 && b.deg_in(v) <= 0) ++v;
    assert(v < a.nvars());
    if (a.deg_in(v) <= 0) return mpoly_gcd(content_in(b, v), a);
    if (b.deg_in(v) <= 0) return mpoly_gcd(content_in(a, v), b);

    MPoly ca = content_in(a, v);
    MPoly cb = content_in(b, v);
    MPoly c = mpoly_gcd(ca, cb);
    MPoly A = *a.divide_exact(ca);
    MPoly B = *b.divide_exact(cb);
    if (A.deg_in(v) < B.deg_in(v)) std::swap(A, B);

    // primitive PRS
    while (true) {
        MPoly R = prem(A, B, v);
        if (R.is_zero()) break;
        if (R.deg_in(v) <= 0) {
            // coprime in v: gcd is carried entirely by the contents
            return normalize_lc(c);
        }
        R = *R.divide_exact(content_in(R, v));
        A = B;
        B = R;
    }
    MPoly g = *B.divide_exact(content_in(B, v));
    return normalize_lc(c * g);
}

} // namespace psval
