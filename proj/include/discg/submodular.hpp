#pragma once

#include "discg/rational.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace discg {

/// Largest ground set a Subset mask can hold.
inline constexpr int kMaxGroundSize = 63;

/// Elements are labelled 1..n; agent i owns element i.
struct GroundSet {
    int n = 1;

    explicit GroundSet(int size);
    bool contains(int element) const { return element >= 1 && element <= n; }
    friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

/// A subset of the ground set stored as a bit mask (bit k <-> element k+1).
class Subset {
public:
    Subset() = default;
    Subset(int n, std::uint64_t mask);

    static Subset empty(int n) { return Subset(n, 0); }
    static Subset full(int n);
    static Subset of(int n, std::initializer_list<int> elements);
    static Subset of(int n, const std::vector<int>& elements);
    /// Parses a binary string of length n, leftmost character is element n.
    static Subset from_binary(int n, const std::string& bits);
    /// {k : indicator_k == 1}; every entry must be exactly 0 or 1.
    static Subset from_indicator(std::span<const Rational> indicator);

    int ground_size() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(int element) const { return (mask_ >> (element - 1)) & 1U; }
    bool is_empty() const { return mask_ == 0; }
    int size() const;
    std::vector<int> elements() const;

    Subset with(int element) const;
    Subset without(int element) const;
    Subset operator|(const Subset& o) const { return Subset(n_, mask_ | o.mask_); }
    Subset operator&(const Subset& o) const { return Subset(n_, mask_ & o.mask_); }

    /// w(X) = 1_X^T w.
    Rational weight(std::span<const Rational> w) const;
    RationalVector indicator() const;
    std::string to_binary() const;
    /// "{1,3}" style listing.
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// Oracle access to a set function F : 2^V -> Q.
class SetFunction {
public:
    virtual ~SetFunction() = default;

    virtual int size() const = 0;
    GroundSet ground() const { return GroundSet(size()); }
    /// F(x). Implementations may assume x.ground_size() == size().
    virtual Rational value(const Subset& x) const = 0;
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

/// Evaluates f at x after checking that x lives on f's ground set.
Rational evaluate(const SetFunction& f, const Subset& x);

/// Dense 2^n value table, indexed by mask.
class TableFunction final : public SetFunction {
public:
    TableFunction(int n, RationalVector values);
    /// Tabulates any oracle; guarded to n <= 20.
    static std::shared_ptr<TableFunction> tabulate(const SetFunction& f);

    int size() const override { return n_; }
    Rational value(const Subset& x) const override { return values_[x.mask()]; }
    const RationalVector& values() const { return values_; }

private:
    int n_;
    RationalVector values_;
};

/// F(X) = w(X).
class ModularFunction final : public SetFunction {
public:
    explicit ModularFunction(RationalVector weights);
    int size() const override { return static_cast<int>(weights_.size()); }
    Rational value(const Subset& x) const override { return x.weight(weights_); }
    const RationalVector& weights() const { return weights_; }

private:
    RationalVector weights_;
};

/// Wraps a callable; handy for tests and ad-hoc functions.
class LambdaFunction final : public SetFunction {
public:
    LambdaFunction(int n, std::function<Rational(const Subset&)> fn);
    int size() const override { return n_; }
    Rational value(const Subset& x) const override { return fn_(x); }

private:
    int n_;
    std::function<Rational(const Subset&)> fn_;
};

/// Sum of set functions over the same ground set.
class SumFunction final : public SetFunction {
public:
    explicit SumFunction(std::vector<SetFunctionPtr> terms);
    int size() const override { return n_; }
    Rational value(const Subset& x) const override;

private:
    int n_;
    std::vector<SetFunctionPtr> terms_;
};

/// X -> F(X) - F(empty). Returns f itself when F(empty) is already 0.
SetFunctionPtr normalize(SetFunctionPtr f);

/// Brute-force check of F(A)+F(B) >= F(A|B)+F(A&B) over all 4^n pairs (n <= 12).
bool check_submodular(const SetFunction& f);

/// Evaluation restricted to the subsets an agent can see: those containing its
/// own element.
class LocalOracle {
public:
    LocalOracle(int owner, SetFunctionPtr backing);

    int owner() const { return owner_; }
    int size() const { return backing_->size(); }
    /// Throws VisibilityViolation when owner() is not in x.
    Rational evaluate(const Subset& x) const;

private:
    int owner_;
    SetFunctionPtr backing_;
};

/// Dense-table text format:
///   <n>
///   table
///   <mask in binary> <value>     (one line per subset)
void write_table(std::ostream& out, const SetFunction& f);
/// Reads the "table" body after the header lines were consumed.
std::shared_ptr<TableFunction> read_table_body(std::istream& in, int n);

}  // namespace discg
