#pragma once

#include <cstdint>
#include <vector>

namespace psval {

/// Integer exponent tuple. Negative entries are allowed (Laurent monomials);
/// contexts that require nonnegativity check it themselves.
using ExpVec = std::vector<int64_t>;

inline int64_t total_degree(const ExpVec& a) {
    int64_t d = 0;
    for (int64_t e : a) d += e;
    return d;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool exp_nonneg(const ExpVec& a) {
    for (int64_t e : a)
        if (e < 0) return false;
    return true;
}

/// Lexicographic order; total and compatible with addition.
inline int lex_cmp(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

/// Graded lex: compare total degree, ties by lex.
inline int grlex_cmp(const ExpVec& a, const ExpVec& b) {
    int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    return lex_cmp(a, b);
}

struct LexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return lex_cmp(a, b) < 0; }
};

struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_cmp(a, b) < 0; }
};

} // namespace psval
