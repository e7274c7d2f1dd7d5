#pragma once

#include "discg/instances.hpp"
#include "discg/submodular.hpp"

#include <memory>
#include <string>

namespace fixtures {

inline discg::Rational q(const std::string& s) { return discg::parse_rational(s); }

inline discg::RationalVector qv(std::initializer_list<const char*> items) {
    discg::RationalVector out;
    for (const char* s : items) out.push_back(discg::parse_rational(s));
    return out;
}

/// F({1})=1, F({2})=2, F({1,2})=5/2.
inline std::shared_ptr<discg::TableFunction> two_element() {
    return std::make_shared<discg::TableFunction>(2, qv({"0", "1", "2", "5/2"}));
}

/// s->1 (3), 1->2 (1), 1->t (1), 2->t (2).
inline discg::CapacitatedDigraph four_node_graph() {
    return discg::CapacitatedDigraph(2, {{0, 1, q("3")}, {1, 2, q("1")}, {1, 3, q("1")}, {2, 3, q("2")}});
}

}  // namespace fixtures
