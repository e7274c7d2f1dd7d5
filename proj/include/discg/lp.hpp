#pragma once

#include "discg/column.hpp"
#include "discg/rational.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace discg {

/// Duals of the master LP. u belongs to the n coordinate rows
/// (G theta - alpha + beta = 0), v to the convexity row (1' theta = 1).
///
/// Sign convention: reduced_cost(c) = cost(c) - u'a - v * a_conv, so every
/// basic column prices to exactly zero. For a Vertex column this is
/// -(u'x + v); the column improves the LP iff u'x + v > 0. v keeps an M
/// coefficient while the convexity artificial is basic.
struct DualPair {
    RationalVector u;
    BigM v;

    friend bool operator==(const DualPair&, const DualPair&) = default;
};

/// Reduced master problem
///
///   min 1'beta  s.t.  G theta - alpha + beta = 0,  1'theta = 1,  all vars >= 0
///
/// Only the Vertex columns of G are stored; Alpha, Beta and the artificial
/// columns are implicit and always priced.
class StandardLP {
public:
    StandardLP(int n, std::vector<Column> vertex_columns);

    int dimension() const { return n_; }
    int rows() const { return n_ + 1; }
    /// Lexsorted, duplicate free.
    const std::vector<Column>& vertex_columns() const { return vertices_; }
    /// Every column of the problem in column order: vertices, alphas, betas, artificials.
    std::vector<Column> all_columns() const;

private:
    int n_;
    std::vector<Column> vertices_;
};

/// Alpha(1..n), Beta(1..n), Artificial(1..n+1) in column order. Cached per n.
const std::vector<Column>& implicit_columns(int n);

/// n+1 basic columns together with the exact inverse of the basis matrix.
/// Row r of the inverse belongs to members()[r].
class Basis {
public:
    /// Inverts the basis matrix exactly; throws LpError if it is singular.
    Basis(int n, std::vector<Column> members);

    int dimension() const { return n_; }
    int rows() const { return n_ + 1; }
    const std::vector<Column>& members() const { return members_; }
    /// Vertex members in column order.
    std::vector<Column> vertex_members() const;
    int vertex_count() const;
    bool has_artificial() const;
    bool contains(const Column& c) const;

    const Rational& inverse(int r, int k) const { return inverse_[static_cast<std::size_t>(r) * rows() + k]; }
    /// B^{-1} a.
    RationalVector solve(const RationalVector& a) const;
    /// Primal value of each member (B^{-1} b with b = (0,..,0,1)).
    RationalVector values() const;
    DualPair duals() const;
    BigM objective() const;
    /// Every row of [B^{-1} b | B^{-1} P] is lexicographically positive, where
    /// P = diag(-1,..,-1,+1) is the right-hand-side perturbation.
    bool lex_feasible() const;

    /// Same member set regardless of row order.
    bool same_members(const Basis& other) const;

private:
    friend class LexSimplex;
    Basis(int n, std::vector<Column> members, RationalVector inverse);

    int n_;
    std::vector<Column> members_;
    RationalVector inverse_;
};

struct BigMStart {
    std::vector<Column> artificials;
    Basis basis;
};

/// The n+1 artificial columns and the all-artificial starting basis.
BigMStart big_m_init(int n);

struct SolveOptions {
    /// When set, one line per pivot: "<entering> <leaving> <objective>".
    std::ostream* pivot_trace = nullptr;
};

struct SolveResult {
    Basis basis;
    /// Value of each basis member, aligned with basis.members().
    RationalVector primal;
    DualPair duals;
    BigM objective;
    int pivots = 0;

    /// Primal value of an arbitrary column (zero when nonbasic).
    Rational value_of(const Column& c) const;
};

/// Primal simplex to the lexicographically optimal basis. Degeneracy is
/// resolved by perturbing the right-hand side by P (eps, eps^2, ..) and each
/// column's cost by an infinitesimal ranked by column order; the optimum of the
/// doubly perturbed problem is a unique basis for a given column set, so the
/// result does not depend on the warm start. An invalid warm basis (missing
/// columns, not lexicographically feasible) is replaced by the artificial start.
SolveResult solve_lex(const StandardLP& lp, const Basis& warm, const SolveOptions& options = {});

BigM reduced_cost(const Column& col, const DualPair& d);

struct PivotResult {
    Basis basis;
    bool admitted = false;
};

/// Admits col with one lexicographic ratio-test pivot if its reduced cost
/// against the basis duals is negative; otherwise returns b unchanged.
PivotResult pivot_in(const Basis& b, const std::optional<Column>& col);

}  // namespace discg
