#include "discg/base_polyhedron.hpp"

#include "discg/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace discg {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int e : order_) {
        if (e < 1 || e > n || seen[e]) throw DimensionMismatch("sequence is not a permutation of 1..n");
        seen[e] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    return Permutation(std::move(order));
}

Permutation full_sort(std::span<const Rational> u) {
    std::vector<int> order(u.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return u[a - 1] > u[b - 1]; });
    return Permutation(std::move(order));
}

std::optional<Permutation> local_sort(std::span<const Rational> u, int i) {
    const int n = static_cast<int>(u.size());
    if (i < 1 || i > n) throw DimensionMismatch("local_sort owner out of range");
    const auto& top = *std::max_element(u.begin(), u.end());
    if (u[i - 1] != top) return std::nullopt;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (u[a - 1] != u[b - 1]) return u[a - 1] > u[b - 1];
        return a == i && b != i;
    });
    return Permutation(std::move(order));
}

namespace {

template <typename Eval>
BaseVertex greedy_along(int n, const Permutation& p, Eval&& eval) {
    if (p.size() != n) throw DimensionMismatch("permutation length differs from the ground set");
    BaseVertex x(n);
    Subset prefix = Subset::empty(n);
    Rational previous = 0;
    for (int pos = 0; pos < n; ++pos) {
        const int j = p[pos];
        prefix = prefix.with(j);
        Rational current = eval(prefix);
        x[j - 1] = current - previous;
        previous = std::move(current);
    }
    return x;
}

}  // namespace

BaseVertex greedy_vertex(const SetFunction& f, const Permutation& p) {
    const Rational at_empty = f.value(Subset::empty(f.size()));
    return greedy_along(f.size(), p, [&](const Subset& s) { return f.value(s) - at_empty; });
}

std::optional<Column> local_greedy(const LocalOracle& oracle, std::span<const Rational> u, int i) {
    if (oracle.owner() != i) throw DimensionMismatch("local_greedy called with a foreign oracle");
    if (static_cast<int>(u.size()) != oracle.size()) throw DimensionMismatch("dual vector length mismatch");
    auto order = local_sort(u, i);
    if (!order) return std::nullopt;
    // Every prefix starts with i, so the oracle never refuses.
    return Column::vertex(greedy_along(oracle.size(), *order, [&](const Subset& s) { return oracle.evaluate(s); }));
}

bool membership_check(const SetFunction& f, std::span<const Rational> x) {
    const int n = f.size();
    if (n > 20) throw GroundSetTooLarge("membership_check enumerates 2^n subsets; n <= 20 required");
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch("point dimension differs from the ground set");
    const std::uint64_t count = std::uint64_t{1} << n;
    // x(S) by Gray-code style accumulation: x(S) = x(S without lowest bit) + x_lowest.
    RationalVector partial(count);
    partial[0] = 0;
    const Rational at_empty = f.value(Subset::empty(n));
    for (std::uint64_t m = 1; m < count; ++m) {
        const int low = std::countr_zero(m);
        partial[m] = partial[m & (m - 1)] + x[low];
        const Rational bound = f.value(Subset(n, m)) - at_empty;
        if (partial[m] > bound) return false;
        if (m == count - 1 && partial[m] != bound) return false;
    }
    return true;
}

}  // namespace discg
