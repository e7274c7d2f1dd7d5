#include "discg/column.hpp"

#include "discg/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace discg {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t hash_payload(ColumnKind kind, int index, const RationalVector& entries) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const std::string head = std::to_string(static_cast<int>(kind)) + ":" + std::to_string(index) + ":";
    h = fnv1a(h, head);
    for (const auto& e : entries) {
        h = fnv1a(h, e.str());
        h = fnv1a(h, ";");
    }
    return h;
}

RationalVector unit(int n, int pos, int sign) {
    RationalVector e(n + 1, Rational(0));
    e[pos] = sign;
    return e;
}

}  // namespace

Column::Column(ColumnKind kind, int index, BigM cost, RationalVector entries)
    : kind_(kind), index_(index), cost_(std::move(cost)), entries_(std::move(entries)) {
    id_ = hash_payload(kind_, index_, entries_);
}

Column Column::vertex(RationalVector x) {
    if (x.empty()) throw DimensionMismatch("vertex column needs at least one coordinate");
    x.emplace_back(1);
    return Column(ColumnKind::Vertex, 0, BigM(), std::move(x));
}

Column Column::alpha(int n, int k) {
    if (k < 1 || k > n) throw DimensionMismatch("alpha index out of range");
    return Column(ColumnKind::Alpha, k, BigM(), unit(n, k - 1, -1));
}

Column Column::beta(int n, int k) {
    if (k < 1 || k > n) throw DimensionMismatch("beta index out of range");
    return Column(ColumnKind::Beta, k, BigM(Rational(1)), unit(n, k - 1, 1));
}

Column Column::artificial(int n, int row) {
    if (row < 1 || row > n + 1) throw DimensionMismatch("artificial row out of range");
    return Column(ColumnKind::Artificial, row, BigM::big(), unit(n, row - 1, row == n + 1 ? 1 : -1));
}

std::string Column::label() const {
    switch (kind_) {
        case ColumnKind::Alpha: return "a" + std::to_string(index_);
        case ColumnKind::Beta: return "b" + std::to_string(index_);
        case ColumnKind::Artificial: return "art" + std::to_string(index_);
        case ColumnKind::Vertex: break;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "v:%08x", static_cast<unsigned>(id_ >> 32));
    return buf;
}

std::strong_ordering operator<=>(const Column& a, const Column& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.index_ != b.index_) return a.index_ <=> b.index_;
    if (a.entries_.size() != b.entries_.size()) return a.entries_.size() <=> b.entries_.size();
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (auto c = compare(a.entries_[k], b.entries_[k]); c != 0) return c;
    return a.cost_ <=> b.cost_;
}

void lexsort_unique(std::vector<Column>& columns) {
    std::sort(columns.begin(), columns.end(), [](const Column& a, const Column& b) { return a < b; });
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
}

}  // namespace discg
