#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psval/mpoly.hpp"

namespace psval {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FieldTower;
class FieldElem;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Reduced fraction of polynomials in the transcendental generators.
/// Canonical: gcd(num, den) = 1 and the graded-lex leading coefficient of den is 1.
struct RatFunc {
    MPoly num, den;

    static RatFunc zero(std::size_t nvars);
    static RatFunc of(MPoly n, MPoly d); // reduces
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc derivative(std::size_t var) const;
};

/// Computable coefficient field: Q(u_1,...,u_r) with optional simple algebraic
/// extensions, each given by a monic minimal polynomial over the tower built
/// so far. Irreducibility is checked at construction.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
public:
    struct AlgExt {
        std::string name;
        std::vector<FieldElem> min_coeffs; // c_0..c_{d-1} of y^d + c_{d-1} y^{d-1} + ... + c_0
    };

    static TowerPtr rationals();
    TowerPtr extend_transcendental(const std::string& name) const;
    TowerPtr extend_algebraic(const std::string& name,
                              const std::vector<FieldElem>& monic_coeffs) const;

    std::size_t num_trans() const { return trans_; }
    std::size_t num_alg() const { return algs_.size(); }
    const std::vector<std::string>& trans_names() const { return trans_names_; }
    const std::vector<AlgExt>& alg_exts() const { return algs_; }
    bool purely_transcendental() const { return algs_.empty(); }
    bool has_generator(const std::string& name) const;
    std::vector<std::string> all_names() const;

    bool same_as(const FieldTower& o) const;
    bool is_prefix_of(const FieldTower& o) const;

    /// degree of the j-th algebraic extension
    int64_t alg_degree(std::size_t j) const;

private:
    friend class FieldElem;
    FieldTower() = default;
    std::size_t trans_ = 0;
    std::vector<std::string> trans_names_;
    std::vector<AlgExt> algs_;
};

/// Element of a FieldTower, in canonical form: a sparse map from reduced
/// algebraic-generator exponent tuples to reduced rational functions of the
/// transcendental generators.
class FieldElem {
public:
    FieldElem() = default;
    static FieldElem zero(const TowerPtr& t);
    static FieldElem one(const TowerPtr& t);
    static FieldElem from_rational(const TowerPtr& t, const Rational& q);
    static FieldElem generator(const TowerPtr& t, const std::string& name);
    static FieldElem from_ratfunc(const TowerPtr& t, RatFunc rf);

    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const { return parts_.empty(); }
    bool is_constant() const; // lies in Q
    std::optional<Rational> as_rational() const;
    bool purely_transcendental_rep() const; // no algebraic generators in the representation
    const RatFunc& ratfunc() const;         // requires purely_transcendental_rep()

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(int64_t e) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// d/du_i, extended to algebraic generators by implicit differentiation.
    FieldElem derivative(std::size_t trans_var) const;

    /// Specialize the transcendental generators at a rational point.
    /// nullopt if a denominator vanishes or the representation uses algebraic
    /// generators.
    std::optional<Rational> specialize(const std::vector<Rational>& point) const;

    FieldElem coerced_to(const TowerPtr& t) const;

    std::string str() const;

private:
    friend class FieldTower;
    TowerPtr tower_;
    std::map<ExpVec, RatFunc, LexLess> parts_; // key size = tower.num_alg()

    static FieldElem from_parts(const TowerPtr& t, std::map<ExpVec, RatFunc, LexLess> raw);
    void add_part(const ExpVec& e, const RatFunc& rf);
    static void align(FieldElem& a, FieldElem& b);
};

/// Rank of a matrix of field elements, by Gaussian elimination.
std::size_t fieldelem_matrix_rank(std::vector<std::vector<FieldElem>> m);

enum class Transcendence { Dependent, Independent };

/// Jacobian criterion on a purely transcendental tower; throws FieldError
/// ("unsupported...") if the tower has algebraic extensions.
Transcendence transcendence_test(const FieldElem& f, const std::vector<FieldElem>& gens);

/// Same criterion with algebraic generators differentiated implicitly through
/// their minimal polynomials; valid in characteristic zero on any tower.
Transcendence transcendence_test_extended(const FieldElem& f, const std::vector<FieldElem>& gens);

/// True iff x is a square in its tower's purely transcendental subfield.
bool is_square_transcendental(const FieldElem& x);

} // namespace psval
