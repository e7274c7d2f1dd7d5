#include "discg/lp.hpp"

#include "discg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>

namespace discg {

namespace {

// Sign of the right-hand-side perturbation on row k: coordinate rows are
// pushed down, the convexity row up. Ties on a coordinate row therefore
// resolve toward Alpha, i.e. toward u_k = 0.
int perturbation_sign(int n, int k) { return k == n ? 1 : -1; }

BigM price(const Column& col, const std::vector<BigM>& y) {
    BigM d = col.cost();
    const auto& a = col.entries();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        if (!y[k].m.is_zero()) d.m -= y[k].m * a[k];
        if (!y[k].r.is_zero()) d.r -= y[k].r * a[k];
    }
    return d;
}

std::size_t find_column(const std::vector<Column>& sorted, const Column& c) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), c, [](const Column& a, const Column& b) { return a < b; });
    if (it == sorted.end() || !(*it == c)) return sorted.size();
    return static_cast<std::size_t>(it - sorted.begin());
}

double binomial_cap(std::size_t total, std::size_t choose) {
    double acc = 1.0;
    for (std::size_t k = 0; k < choose && k < total; ++k) {
        acc *= static_cast<double>(total - k) / static_cast<double>(k + 1);
        if (acc > 1e12) return 1e12;
    }
    return acc;
}

}  // namespace

StandardLP::StandardLP(int n, std::vector<Column> vertex_columns) : n_(n), vertices_(std::move(vertex_columns)) {
    if (n < 1) throw DimensionMismatch("LP dimension must be positive");
    for (const auto& c : vertices_) {
        if (c.kind() != ColumnKind::Vertex) throw DimensionMismatch("only Vertex columns are stored explicitly");
        if (c.dimension() != n) throw DimensionMismatch("vertex column has the wrong dimension");
    }
    lexsort_unique(vertices_);
}

std::vector<Column> StandardLP::all_columns() const {
    std::vector<Column> out = vertices_;
    const auto& implicit = implicit_columns(n_);
    out.insert(out.end(), implicit.begin(), implicit.end());
    return out;
}

const std::vector<Column>& implicit_columns(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<Column>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(n);
    if (inserted) {
        auto& cols = it->second;
        for (int k = 1; k <= n; ++k) cols.push_back(Column::alpha(n, k));
        for (int k = 1; k <= n; ++k) cols.push_back(Column::beta(n, k));
        for (int r = 1; r <= n + 1; ++r) cols.push_back(Column::artificial(n, r));
    }
    return it->second;
}

// --- Basis -----------------------------------------------------------------

Basis::Basis(int n, std::vector<Column> members) : n_(n), members_(std::move(members)) {
    const int m = rows();
    if (static_cast<int>(members_.size()) != m) throw DimensionMismatch("a basis needs exactly n+1 members");
    for (const auto& c : members_)
        if (c.dimension() != n) throw DimensionMismatch("basis member has the wrong dimension");

    // Gauss-Jordan on [B | I]; B(k, r) = members[r].entries[k].
    std::vector<RationalVector> work(m, RationalVector(2 * m, Rational(0)));
    for (int k = 0; k < m; ++k) {
        for (int r = 0; r < m; ++r) work[k][r] = members_[r].entries()[k];
        work[k][m + k] = 1;
    }
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        while (pivot < m && work[pivot][col].is_zero()) ++pivot;
        if (pivot == m) throw LpError("basis matrix is singular");
        std::swap(work[pivot], work[col]);
        const Rational p = work[col][col];
        for (auto& e : work[col]) e /= p;
        for (int r = 0; r < m; ++r) {
            if (r == col || work[r][col].is_zero()) continue;
            const Rational f = work[r][col];
            for (int c = 0; c < 2 * m; ++c)
                if (!work[col][c].is_zero()) work[r][c] -= f * work[col][c];
        }
    }
    // After elimination row `col` holds row `col` of B^{-1}; row r of the
    // inverse pairs with basis position r.
    inverse_.assign(static_cast<std::size_t>(m) * m, Rational(0));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k < m; ++k) inverse_[static_cast<std::size_t>(r) * m + k] = work[r][m + k];
}

Basis::Basis(int n, std::vector<Column> members, RationalVector inverse)
    : n_(n), members_(std::move(members)), inverse_(std::move(inverse)) {}

std::vector<Column> Basis::vertex_members() const {
    std::vector<Column> out;
    for (const auto& c : members_)
        if (c.kind() == ColumnKind::Vertex) out.push_back(c);
    lexsort_unique(out);
    return out;
}

int Basis::vertex_count() const {
    return static_cast<int>(std::count_if(members_.begin(), members_.end(),
                                          [](const Column& c) { return c.kind() == ColumnKind::Vertex; }));
}

bool Basis::has_artificial() const {
    return std::any_of(members_.begin(), members_.end(),
                       [](const Column& c) { return c.kind() == ColumnKind::Artificial; });
}

bool Basis::contains(const Column& c) const { return std::find(members_.begin(), members_.end(), c) != members_.end(); }

RationalVector Basis::solve(const RationalVector& a) const {
    const int m = rows();
    if (static_cast<int>(a.size()) != m) throw DimensionMismatch("column length differs from the basis");
    RationalVector w(m, Rational(0));
    for (int k = 0; k < m; ++k) {
        if (a[k].is_zero()) continue;
        for (int r = 0; r < m; ++r) {
            const auto& e = inverse(r, k);
            if (!e.is_zero()) w[r] += e * a[k];
        }
    }
    return w;
}

RationalVector Basis::values() const {
    RationalVector x(rows());
    for (int r = 0; r < rows(); ++r) x[r] = inverse(r, n_);
    return x;
}

namespace {

std::vector<BigM> dual_vector(const Basis& b) {
    const int m = b.rows();
    std::vector<BigM> y(m);
    for (int r = 0; r < m; ++r) {
        const BigM& c = b.members()[r].cost();
        if (c.sign() == 0) continue;
        for (int k = 0; k < m; ++k) {
            const auto& e = b.inverse(r, k);
            if (e.is_zero()) continue;
            if (!c.m.is_zero()) y[k].m += c.m * e;
            if (!c.r.is_zero()) y[k].r += c.r * e;
        }
    }
    return y;
}

}  // namespace

DualPair Basis::duals() const {
    auto y = dual_vector(*this);
    DualPair d;
    d.u.reserve(n_);
    for (int k = 0; k < n_; ++k) {
        if (!y[k].m.is_zero())
            throw LpError("coordinate dual carries an M part; duals are only read at optimal bases");
        d.u.push_back(y[k].r);
    }
    d.v = y[n_];
    return d;
}

BigM Basis::objective() const {
    BigM obj;
    for (int r = 0; r < rows(); ++r) obj += members_[r].cost() * inverse(r, n_);
    return obj;
}

bool Basis::lex_feasible() const {
    const int m = rows();
    for (int r = 0; r < m; ++r) {
        int s = inverse(r, n_).sign();
        for (int k = 0; s == 0 && k < m; ++k) s = inverse(r, k).sign() * perturbation_sign(n_, k);
        if (s <= 0) return false;
    }
    return true;
}

bool Basis::same_members(const Basis& other) const {
    if (n_ != other.n_) return false;
    auto a = members_;
    auto b = other.members_;
    lexsort_unique(a);
    lexsort_unique(b);
    return a == b;
}

// --- simplex kernel --------------------------------------------------------

class LexSimplex {
public:
    /// Row leaving the basis when a column with B^{-1}a = w enters, by the
    /// lexicographic ratio test; nullopt if no entry of w is positive.
    static std::optional<int> ratio_test(const Basis& b, const RationalVector& w) {
        const int m = b.rows();
        const int n = b.dimension();
        std::optional<int> best;
        for (int r = 0; r < m; ++r) {
            if (w[r].sign() <= 0) continue;
            if (!best) {
                best = r;
                continue;
            }
            // Compare row r / w_r against row best / w_best via cross products.
            const int q = *best;
            auto component = [&](int row, int c) -> const Rational& {
                return c == 0 ? b.inverse(row, n) : b.inverse(row, c - 1);
            };
            for (int c = 0; c <= m; ++c) {
                const int s = c == 0 ? 1 : perturbation_sign(n, c - 1);
                const Rational lhs = component(r, c) * w[q];
                const Rational rhs = component(q, c) * w[r];
                if (lhs == rhs) continue;
                if ((s > 0) == (lhs < rhs)) best = r;
                break;
            }
        }
        return best;
    }

    static void pivot(Basis& b, int leave, const Column& enter, const RationalVector& w) {
        const int m = b.rows();
        auto row = [&](int r) { return b.inverse_.begin() + static_cast<std::ptrdiff_t>(r) * m; };
        const Rational p = w[leave];
        for (int k = 0; k < m; ++k) row(leave)[k] /= p;
        for (int r = 0; r < m; ++r) {
            if (r == leave || w[r].is_zero()) continue;
            for (int k = 0; k < m; ++k) {
                const auto& lk = row(leave)[k];
                if (!lk.is_zero()) row(r)[k] -= w[r] * lk;
            }
        }
        b.members_[leave] = enter;
    }

    /// Sign of the infinitesimal part of a nonbasic column's reduced cost.
    /// That part is e_j - sum_r w_r e_{B_r} over column-ranked infinitesimals;
    /// the smallest column in its support decides.
    static int perturbed_sign(const Basis& b, const Column& col, const RationalVector& w) {
        const Column* lead = &col;
        int s = 1;
        for (int r = 0; r < b.rows(); ++r) {
            if (w[r].is_zero()) continue;
            if (b.members()[r] < *lead) {
                lead = &b.members()[r];
                s = -w[r].sign();
            }
        }
        return s;
    }
};

BigMStart big_m_init(int n) {
    std::vector<Column> art;
    for (int r = 1; r <= n + 1; ++r) art.push_back(Column::artificial(n, r));
    Basis basis(n, art);
    return {std::move(art), std::move(basis)};
}

Rational SolveResult::value_of(const Column& c) const {
    const auto& members = basis.members();
    for (std::size_t r = 0; r < members.size(); ++r)
        if (members[r] == c) return primal[r];
    return 0;
}

SolveResult solve_lex(const StandardLP& lp, const Basis& warm, const SolveOptions& options) {
    const int n = lp.dimension();
    const auto columns = lp.all_columns();

    auto usable = [&](const Basis& b) {
        if (b.dimension() != n) return false;
        for (const auto& c : b.members())
            if (find_column(columns, c) == columns.size()) return false;
        return b.lex_feasible();
    };
    Basis basis = usable(warm) ? warm : big_m_init(n).basis;

    const double cap = binomial_cap(columns.size(), static_cast<std::size_t>(n + 1));
    int pivots = 0;
    std::vector<bool> basic(columns.size());
    while (true) {
        std::fill(basic.begin(), basic.end(), false);
        for (const auto& c : basis.members()) basic[find_column(columns, c)] = true;
        const auto y = dual_vector(basis);

        std::optional<std::size_t> enter;
        BigM best;
        std::vector<std::size_t> zero_priced;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (basic[j]) continue;
            BigM d = price(columns[j], y);
            const int s = d.sign();
            if (s < 0 && (!enter || d < best)) {
                enter = j;
                best = std::move(d);
            } else if (s == 0) {
                zero_priced.push_back(j);
            }
        }
        RationalVector w;
        if (enter) {
            w = basis.solve(columns[*enter].entries());
        } else {
            for (std::size_t j : zero_priced) {
                auto wj = basis.solve(columns[j].entries());
                if (LexSimplex::perturbed_sign(basis, columns[j], wj) < 0) {
                    enter = j;
                    w = std::move(wj);
                    break;
                }
            }
        }
        if (!enter) break;

        const auto leave = LexSimplex::ratio_test(basis, w);
        if (!leave) throw LpError("master LP reported unbounded; this indicates a malformed column");
        const Column leaving = basis.members()[*leave];
        LexSimplex::pivot(basis, *leave, columns[*enter], w);
        ++pivots;
        if (options.pivot_trace)
            *options.pivot_trace << columns[*enter].label() << ' ' << leaving.label() << ' '
                                 << to_string(basis.objective()) << '\n';
        if (pivots > cap) throw LpError("lexicographic simplex exceeded its pivot bound");
    }

    SolveResult result{basis, basis.values(), basis.duals(), basis.objective(), pivots};
    return result;
}

BigM reduced_cost(const Column& col, const DualPair& d) {
    const int n = col.dimension();
    if (static_cast<int>(d.u.size()) != n) throw DimensionMismatch("dual length differs from the column");
    BigM rc = col.cost();
    rc.r -= dot(col.coordinates(), d.u);
    rc -= d.v * col.convexity();
    return rc;
}

PivotResult pivot_in(const Basis& b, const std::optional<Column>& col) {
    if (!col) return {b, false};
    if (col->dimension() != b.dimension()) throw DimensionMismatch("column dimension differs from the basis");
    if (b.contains(*col)) return {b, false};
    const auto y = dual_vector(b);
    if (price(*col, y).sign() >= 0) return {b, false};
    const auto w = b.solve(col->entries());
    const auto leave = LexSimplex::ratio_test(b, w);
    if (!leave) throw LpError("pivot found no leaving row; the column is unbounded");
    Basis next = b;
    LexSimplex::pivot(next, *leave, *col, w);
    return {std::move(next), true};
}

}  // namespace discg
