#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psval/expvec.hpp"
#include "psval/rational.hpp"

namespace psval {

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept in graded-lex order; zero coefficients are never stored.
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t i, int64_t power = 1);
    static MPoly monomial(std::size_t nvars, const ExpVec& e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()
    int64_t total_deg() const;       // -1 for zero
    int64_t deg_in(std::size_t var) const; // -1 for zero

    void add_term(const ExpVec& e, const Rational& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Leading term under graded lex.
    const ExpVec& lead_exp() const;
    const Rational& lead_coeff() const;

    MPoly derivative(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;

    /// Exact quotient; nullopt if o does not divide this exactly.
    std::optional<MPoly> divide_exact(const MPoly& o) const;

    /// Square root if this is a perfect square in Q[x1..xk].
    std::optional<MPoly> sqrt_exact() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// gcd in Q[x1..xk], normalized so the graded-lex leading coefficient is 1.
/// gcd(0,0) = 0; any nonzero constant input gives 1.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

} // namespace psval
