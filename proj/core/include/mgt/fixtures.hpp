#pragma once

#include <string>
#include <vector>

#include "mgt/transit.hpp"

namespace mgt {

/// A bundled transit function together with its documented axiom profile.
/// Axioms outside holds/fails are intentionally unspecified.
struct Fixture {
    std::string name;
    std::string summary;
    std::vector<std::string> ground; // printable names of 0..n-1
    TransitFunction fn;
    std::vector<Axiom> holds;
    std::vector<Axiom> fails;
    /// Recorded violating instantiation for the first failing axiom, in that
    /// axiom's witness-role order; empty when not recorded.
    std::vector<int> known_violation;
};

/// The twelve bundled fixtures: ex31, ex1..ex6, e1..e5.
const std::vector<Fixture>& fixture_catalog();

/// Throws std::invalid_argument for unknown names.
const Fixture& load_fixture(std::string_view name);

} // namespace mgt
