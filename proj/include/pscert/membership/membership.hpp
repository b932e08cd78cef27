#pragma once

// Ideal membership in a single graded piece: target = sum g_i * h_i with
// h_i homogeneous of degree deg(target) - deg(g_i), solved as an exact linear
// system over Q (Macaulay matrix).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pscert/membership/multipoly.hpp"

namespace pscert {

struct MembershipAnswer {
    bool member = false;
    std::vector<MultiPoly> cofactors;  // one per generator when member
    int degree_bound = 0;
    std::size_t rows = 0, columns = 0, rank = 0;
};

/// All exponent vectors of length n and total degree d, in lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<Monomial> out;
    Monomial m(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

namespace detail {

inline std::size_t rational_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Solves A x = t exactly; returns false when inconsistent. Free unknowns are 0.
inline bool solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> t, std::vector<Rational>& x,
                        std::size_t& rank) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (A[i][c] != 0 && (best == rows || rational_size(A[i][c]) < rational_size(A[best][c]))) best = i;
        if (best == rows) continue;
        std::swap(A[r], A[best]);
        std::swap(t[r], t[best]);
        const Rational inv = 1 / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        t[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (A[r][j] != 0) A[i][j] -= f * A[r][j];
            t[i] -= f * t[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (t[i] != 0) return false;
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = t[i];
    return true;
}

}  // namespace detail

inline MembershipAnswer graded_membership(const MultiPoly& target, const std::vector<MultiPoly>& generators) {
    const std::size_t n = target.nvars();
    for (const auto& g : generators)
        if (g.nvars() != n) throw RingMismatch("generators and target use different variable counts");
    MembershipAnswer ans;
    ans.cofactors.assign(generators.size(), MultiPoly(n));
    if (!target.zero() && !target.homogeneous_degree()) throw DegreeMismatch("target is not homogeneous");
    std::vector<int> gdeg(generators.size(), -1);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].zero()) continue;
        auto d = generators[i].homogeneous_degree();
        if (!d) throw DegreeMismatch("generator " + std::to_string(i + 1) + " is not homogeneous");
        gdeg[i] = *d;
    }
    if (target.zero()) {
        ans.member = true;
        return ans;
    }
    const int D = *target.homogeneous_degree();
    ans.degree_bound = D;
    bool any = false;
    for (int d : gdeg) any = any || (d >= 0 && d <= D);
    if (!any) throw DomainError("no generator has degree at most the target degree");

    const auto row_monos = monomials_of_degree(n, D);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < row_monos.size(); ++i) row_of[row_monos[i]] = i;

    struct Column {
        std::size_t gen;
        Monomial mono;
    };
    std::vector<Column> columns;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (gdeg[i] >= 0 && gdeg[i] <= D)
            for (auto& m : monomials_of_degree(n, D - gdeg[i])) columns.push_back({i, m});

    std::vector<std::vector<Rational>> A(row_monos.size(), std::vector<Rational>(columns.size()));
    Monomial prod(n);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [gm, gc] : generators[columns[j].gen].terms()) {
            for (std::size_t k = 0; k < n; ++k) prod[k] = gm[k] + columns[j].mono[k];
            A[row_of.at(prod)][j] += gc;
        }
    std::vector<Rational> t(row_monos.size());
    for (const auto& [m, c] : target.terms()) t[row_of.at(m)] = c;

    ans.rows = row_monos.size();
    ans.columns = columns.size();
    std::vector<Rational> x;
    if (!detail::solve_exact(std::move(A), std::move(t), x, ans.rank)) return ans;

    for (std::size_t j = 0; j < columns.size(); ++j) ans.cofactors[columns[j].gen].add_term(columns[j].mono, x[j]);
    MultiPoly check(n);
    for (std::size_t i = 0; i < generators.size(); ++i) check += ans.cofactors[i] * generators[i];
    if (!(check == target)) throw std::logic_error("membership cofactors do not reproduce the target");
    ans.member = true;
    return ans;
}

/// (x2^2 x3^2 + x2^2 x4^2 + x3^2 x4^2 - x1^4)^2 - k (x1 x2 x3 x4)^2 in four variables.
inline MultiPoly zerodivisor_form(const Rational& k = 2) {
    auto x = [](std::size_t i) { return MultiPoly::variable(4, i); };
    MultiPoly s = x(1).pow(2) * x(2).pow(2) + x(1).pow(2) * x(3).pow(2) + x(2).pow(2) * x(3).pow(2) - x(0).pow(4);
    MultiPoly m = x(0) * x(1) * x(2) * x(3);
    return s.pow(2) - k * m.pow(2);
}

/// Membership of the degree-8 form above in (p_2, p_8), n = 4.
inline MembershipAnswer zerodivisor_identity_check(const Rational& k = 2) {
    return graded_membership(zerodivisor_form(k), {power_sum(4, 2), power_sum(4, 8)});
}

}  // namespace pscert
