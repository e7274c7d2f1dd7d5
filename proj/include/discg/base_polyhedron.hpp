#pragma once

#include "discg/column.hpp"
#include "discg/submodular.hpp"

#include <optional>
#include <span>
#include <vector>

namespace discg {

/// An ordering (j_1, ..., j_n) of the element ids 1..n.
class Permutation {
public:
    /// Throws DimensionMismatch unless order is a permutation of 1..n.
    explicit Permutation(std::vector<int> order);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    int operator[](int pos) const { return order_[pos]; }
    const std::vector<int>& order() const { return order_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> order_;
};

/// A point of B(F) produced by the greedy algorithm, indexed by element - 1.
using BaseVertex = RationalVector;

/// Descending order of u; ties go to the smaller element id.
Permutation full_sort(std::span<const Rational> u);

/// Prioritized sort for agent i: when (u)_i is a maximum of u the result is the
/// descending order with i moved to the front of its tie class. Returns nullopt
/// (a refusal) otherwise.
std::optional<Permutation> local_sort(std::span<const Rational> u, int i);

/// Greedy vertex of B(F) along p: x_{j_l} = F({j_1..j_l}) - F({j_1..j_{l-1}}).
/// F is read relative to F(empty), which is a no-op for normalized functions.
BaseVertex greedy_vertex(const SetFunction& f, const Permutation& p);

/// Column generation step of agent i using only sets that contain i. Returns
/// the column (0; x^B; 1) or nullopt when local_sort refuses.
std::optional<Column> local_greedy(const LocalOracle& oracle, std::span<const Rational> u, int i);

/// True iff x lies in B(F): x(S) <= F(S) for every S and x(V) = F(V).
/// Enumerates all 2^n subsets, so n <= 20.
bool membership_check(const SetFunction& f, std::span<const Rational> x);

}  // namespace discg
