#include "discg/submodular.hpp"

#include "discg/errors.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace discg {

GroundSet::GroundSet(int size) : n(size) {
    if (size > kMaxGroundSize)
        throw GroundSetTooLarge("ground set size " + std::to_string(size) + " exceeds " +
                                std::to_string(kMaxGroundSize));
    if (size < 1)
        throw DimensionMismatch("ground set size must be in [1, " + std::to_string(kMaxGroundSize) +
                                "], got " + std::to_string(size));
}

Subset::Subset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    GroundSet g(n);
    if (n < 64 && (mask >> n) != 0) throw DimensionMismatch("subset mask exceeds ground set");
}

Subset Subset::full(int n) {
    GroundSet g(n);
    return Subset(n, (std::uint64_t{1} << n) - 1);
}

Subset Subset::of(int n, std::initializer_list<int> elements) {
    return of(n, std::vector<int>(elements));
}

Subset Subset::of(int n, const std::vector<int>& elements) {
    Subset s = empty(n);
    for (int e : elements) s = s.with(e);
    return s;
}

Subset Subset::from_binary(int n, const std::string& bits) {
    if (static_cast<int>(bits.size()) != n)
        throw ParseError("mask '" + bits + "' does not have " + std::to_string(n) + " digits");
    std::uint64_t mask = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("mask '" + bits + "' is not binary");
        mask = (mask << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Subset(n, mask);
}

Subset Subset::from_indicator(std::span<const Rational> indicator) {
    Subset s = empty(static_cast<int>(indicator.size()));
    for (std::size_t k = 0; k < indicator.size(); ++k) {
        if (indicator[k] == 1)
            s = s.with(static_cast<int>(k) + 1);
        else if (indicator[k] != 0)
            throw DimensionMismatch("indicator entry " + indicator[k].str() + " is not 0/1");
    }
    return s;
}

int Subset::size() const { return std::popcount(mask_); }

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int e = 1; e <= n_; ++e)
        if (contains(e)) out.push_back(e);
    return out;
}

Subset Subset::with(int element) const {
    if (element < 1 || element > n_) throw DimensionMismatch("element " + std::to_string(element) + " out of range");
    return Subset(n_, mask_ | (std::uint64_t{1} << (element - 1)));
}

Subset Subset::without(int element) const {
    if (element < 1 || element > n_) throw DimensionMismatch("element " + std::to_string(element) + " out of range");
    return Subset(n_, mask_ & ~(std::uint64_t{1} << (element - 1)));
}

Rational Subset::weight(std::span<const Rational> w) const {
    if (static_cast<int>(w.size()) != n_) throw DimensionMismatch("weight vector length mismatch");
    Rational acc = 0;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) acc += w[std::countr_zero(m)];
    return acc;
}

RationalVector Subset::indicator() const {
    RationalVector out(n_, Rational(0));
    for (int e = 1; e <= n_; ++e)
        if (contains(e)) out[e - 1] = 1;
    return out;
}

std::string Subset::to_binary() const {
    std::string out(n_, '0');
    for (int e = 1; e <= n_; ++e)
        if (contains(e)) out[n_ - e] = '1';
    return out;
}

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

Rational evaluate(const SetFunction& f, const Subset& x) {
    if (x.ground_size() != f.size())
        throw DimensionMismatch("subset over " + std::to_string(x.ground_size()) +
                                " elements passed to a function over " + std::to_string(f.size()));
    return f.value(x);
}

TableFunction::TableFunction(int n, RationalVector values) : n_(n), values_(std::move(values)) {
    GroundSet g(n);
    if (n > 20) throw GroundSetTooLarge("dense tables are limited to n <= 20");
    if (values_.size() != (std::size_t{1} << n)) throw DimensionMismatch("table must have 2^n entries");
}

std::shared_ptr<TableFunction> TableFunction::tabulate(const SetFunction& f) {
    const int n = f.size();
    if (n > 20) throw GroundSetTooLarge("cannot tabulate a function over more than 20 elements");
    RationalVector values(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < values.size(); ++m) values[m] = f.value(Subset(n, m));
    return std::make_shared<TableFunction>(n, std::move(values));
}

ModularFunction::ModularFunction(RationalVector weights) : weights_(std::move(weights)) {
    GroundSet g(static_cast<int>(weights_.size()));
}

LambdaFunction::LambdaFunction(int n, std::function<Rational(const Subset&)> fn) : n_(n), fn_(std::move(fn)) {
    GroundSet g(n);
}

SumFunction::SumFunction(std::vector<SetFunctionPtr> terms) : n_(0), terms_(std::move(terms)) {
    if (terms_.empty()) throw DimensionMismatch("empty sum of set functions");
    n_ = terms_.front()->size();
    for (const auto& t : terms_)
        if (t->size() != n_) throw DimensionMismatch("summands live on different ground sets");
}

Rational SumFunction::value(const Subset& x) const {
    Rational acc = 0;
    for (const auto& t : terms_) acc += t->value(x);
    return acc;
}

namespace {

class ShiftedFunction final : public SetFunction {
public:
    ShiftedFunction(SetFunctionPtr base, Rational offset) : base_(std::move(base)), offset_(std::move(offset)) {}
    int size() const override { return base_->size(); }
    Rational value(const Subset& x) const override { return base_->value(x) - offset_; }

private:
    SetFunctionPtr base_;
    Rational offset_;
};

}  // namespace

SetFunctionPtr normalize(SetFunctionPtr f) {
    Rational at_empty = f->value(Subset::empty(f->size()));
    if (at_empty.is_zero()) return f;
    return std::make_shared<ShiftedFunction>(std::move(f), std::move(at_empty));
}

bool check_submodular(const SetFunction& f) {
    const int n = f.size();
    if (n > 12) throw GroundSetTooLarge("check_submodular enumerates 4^n pairs; n <= 12 required");
    const auto table = TableFunction::tabulate(f);
    const auto& v = table->values();
    const std::uint64_t count = std::uint64_t{1} << n;
    Rational lhs;
    Rational rhs;
    for (std::uint64_t a = 0; a < count; ++a) {
        for (std::uint64_t b = a + 1; b < count; ++b) {
            // Comparable pairs satisfy the inequality with equality.
            if ((a & b) == a || (a & b) == b) continue;
            lhs = v[a] + v[b];
            rhs = v[a | b] + v[a & b];
            if (lhs < rhs) return false;
        }
    }
    return true;
}

LocalOracle::LocalOracle(int owner, SetFunctionPtr backing) : owner_(owner), backing_(std::move(backing)) {
    if (!backing_) throw DimensionMismatch("local oracle needs a backing function");
    if (owner_ < 1 || owner_ > backing_->size())
        throw DimensionMismatch("oracle owner " + std::to_string(owner_) + " outside the ground set");
}

Rational LocalOracle::evaluate(const Subset& x) const {
    if (x.ground_size() != backing_->size()) throw DimensionMismatch("subset over the wrong ground set");
    if (!x.contains(owner_))
        throw VisibilityViolation("agent " + std::to_string(owner_) + " cannot evaluate F" + x.to_string());
    return backing_->value(x);
}

void write_table(std::ostream& out, const SetFunction& f) {
    const int n = f.size();
    if (n > 20) throw GroundSetTooLarge("dense tables are limited to n <= 20");
    out << n << "\ntable\n";
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Subset x(n, m);
        out << x.to_binary() << ' ' << f.value(x).str() << '\n';
    }
}

std::shared_ptr<TableFunction> read_table_body(std::istream& in, int n) {
    if (n > 20) throw GroundSetTooLarge("dense tables are limited to n <= 20");
    const std::size_t count = std::size_t{1} << n;
    RationalVector values(count);
    std::vector<bool> seen(count, false);
    std::string bits;
    std::string value;
    std::size_t read = 0;
    while (in >> bits >> value) {
        const Subset x = Subset::from_binary(n, bits);
        if (seen[x.mask()]) throw ParseError("duplicate table entry for mask " + bits);
        seen[x.mask()] = true;
        values[x.mask()] = parse_rational(value);
        ++read;
    }
    if (read != count)
        throw ParseError("table lists " + std::to_string(read) + " of " + std::to_string(count) + " subsets");
    return std::make_shared<TableFunction>(n, std::move(values));
}

}  // namespace discg
