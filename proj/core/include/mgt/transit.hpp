#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgt/graph.hpp"

namespace mgt {

/// Total map from ordered vertex pairs to vertex sets over a finite ground
/// set.  Values are stored for both orders so symmetry violations are
/// representable; none of the transit axioms are assumed.
class TransitFunction {
public:
    TransitFunction() = default;
    /// Geodesically trivial table: R(u,v) = {u,v} and R(u,u) = {u}.
    explicit TransitFunction(int n);

    int size() const { return n_; }
    VertexSet at(int u, int v) const {
        return table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    void set(int u, int v, VertexSet s);     // one order
    void set_sym(int u, int v, VertexSet s); // both orders

    bool operator==(const TransitFunction&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> table_;
};

/// All checkable axioms.  t1..t3 are the defining transit axioms; b1..b4 the
/// betweenness axioms; J0/J0p the Sholander axiom and its weakening; ta, s1,
/// s2, br, brp the remaining first-order axioms; IB1..IB7 the ternary
/// relation form with B(u,x,v) meaning x in R(u,v).
enum class Axiom {
    t1, t2, t3,
    b1, b2, b3, b4,
    J0, J0p,
    ta, s1, s2,
    br, brp,
    IB1, IB2, IB3, IB4, IB5, IB6, IB7,
};

inline constexpr std::array<Axiom, 21> kAllAxioms = {
    Axiom::t1, Axiom::t2, Axiom::t3, Axiom::b1, Axiom::b2, Axiom::b3, Axiom::b4,
    Axiom::J0, Axiom::J0p, Axiom::ta, Axiom::s1, Axiom::s2, Axiom::br, Axiom::brp,
    Axiom::IB1, Axiom::IB2, Axiom::IB3, Axiom::IB4, Axiom::IB5, Axiom::IB6, Axiom::IB7,
};

std::string_view axiom_name(Axiom a);                       // "t1", "J0p", "brp", "IB4", ...
std::optional<Axiom> axiom_from_name(std::string_view s);   // accepts "J0'", "br'" aliases
/// Names of the quantified vertices, in witness order.
std::vector<std::string_view> axiom_witness_roles(Axiom a);

struct AxiomReport {
    Axiom axiom = Axiom::t1;
    bool holds = true;
    /// First failing instantiation in lexicographic scan order, empty when
    /// the axiom holds.  Order matches axiom_witness_roles.
    std::vector<int> witness;
};

AxiomReport check_axiom(const TransitFunction& r, Axiom a);
bool axiom_holds(const TransitFunction& r, Axiom a);
/// Re-evaluates the axiom body on one instantiation; true when violated.
bool axiom_violated_at(const TransitFunction& r, Axiom a, std::span<const int> tuple);

/// Graph on the same ground set with an edge uv iff R(u,v) = {u,v} holds in
/// both orders.
Graph underlying_graph(const TransitFunction& r);

/// The interval function I of a connected graph.  Throws std::domain_error
/// on disconnected input.
TransitFunction interval_function(const Graph& g);

/// True iff r coincides tablewise with the interval function of its
/// underlying graph; throws std::domain_error naming the issue when the
/// underlying graph is disconnected.
bool equals_interval_function(const TransitFunction& r);

// -- text format --------------------------------------------------------------
//
//   n <k>
//   u v : w1 w2 ...     sets both orders
//   u v -> w1 w2 ...    sets the (u,v) order only
//
// '#' starts a comment.  Unlisted off-diagonal pairs default to {u,v},
// unlisted diagonal entries to {u}.

TransitFunction parse_transit(std::string_view text);
std::string emit_transit(const TransitFunction& r);

} // namespace mgt
