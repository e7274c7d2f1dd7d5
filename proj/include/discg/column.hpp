#pragma once

#include "discg/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace discg {

enum class ColumnKind : std::uint8_t { Vertex, Alpha, Beta, Artificial };

/// A costed column of the master LP over n+1 rows: n coordinate rows and the
/// convexity row. Layout of the entries is (a_1 .. a_n, a_conv).
///
///   Vertex      cost 0   (x^B, 1)
///   Alpha(k)    cost 0   (-e_k, 0)
///   Beta(k)     cost 1   (e_k, 0)
///   Artificial  cost M   -e_r on a coordinate row, +e_conv on the convexity row
///
/// Artificial columns carry the sign of the perturbed right-hand side so the
/// all-artificial start is lexicographically feasible.
///
/// Columns are totally ordered by kind, then index, then entries; this order
/// is the lexsort used when pools are merged and the tie-break order of the
/// simplex.
class Column {
public:
    static Column vertex(RationalVector x);
    /// k is an element id, 1..n.
    static Column alpha(int n, int k);
    static Column beta(int n, int k);
    /// row is 1..n for coordinate rows, n+1 for the convexity row.
    static Column artificial(int n, int row);

    ColumnKind kind() const { return kind_; }
    int index() const { return index_; }
    int dimension() const { return static_cast<int>(entries_.size()) - 1; }
    const BigM& cost() const { return cost_; }
    const RationalVector& entries() const { return entries_; }
    /// The n coordinate entries; for Vertex columns this is x^B.
    std::span<const Rational> coordinates() const { return {entries_.data(), entries_.size() - 1}; }
    const Rational& convexity() const { return entries_.back(); }
    /// Stable 64-bit hash of kind and exact payload.
    std::uint64_t id() const { return id_; }
    /// Short human readable identity: "a3", "b1", "art4", "v:1a2b3c4d".
    std::string label() const;

    friend bool operator==(const Column& a, const Column& b) {
        return a.id_ == b.id_ && a.kind_ == b.kind_ && a.index_ == b.index_ && a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const Column& a, const Column& b);

private:
    Column(ColumnKind kind, int index, BigM cost, RationalVector entries);

    ColumnKind kind_;
    int index_;
    BigM cost_;
    RationalVector entries_;
    std::uint64_t id_;
};

/// Sorts by column order and removes duplicates.
void lexsort_unique(std::vector<Column>& columns);

}  // namespace discg
