#include "mgt/fixtures.hpp"

#include <stdexcept>

namespace mgt {

namespace {

using A = Axiom;

TransitFunction base(int n) { return TransitFunction(n); } // all pairs default to {u,v}

Fixture make_ex31() {
    // ground a,b,c,d,e -> 0..4; every unordered pair listed explicitly
    TransitFunction r = base(5);
    r.set_sym(0, 4, VertexSet::of({0, 4}));
    r.set_sym(0, 1, VertexSet::of({0, 1}));
    r.set_sym(1, 4, VertexSet::of({1, 4}));
    r.set_sym(1, 2, VertexSet::of({1, 2}));
    r.set_sym(2, 4, VertexSet::of({2, 4}));
    r.set_sym(2, 3, VertexSet::of({2, 3}));
    r.set_sym(3, 4, VertexSet::of({3, 4}));
    r.set_sym(0, 2, VertexSet::of({0, 1, 2, 4}));
    r.set_sym(0, 3, VertexSet::of({0, 4, 3}));
    r.set_sym(1, 3, VertexSet::of({1, 2, 3, 4}));
    return {"ex31",
            "5-point function separating J0 from J0p: J0 fails, J0p holds",
            {"a", "b", "c", "d", "e"},
            r,
            {A::t1, A::t2, A::t3, A::J0p},
            {A::J0},
            {0, 1, 2, 3}};
}

Fixture make_ex1() {
    TransitFunction r = base(4); // u,v,x,y
    r.set_sym(0, 1, VertexSet::of({0}));
    r.set_sym(0, 2, VertexSet::of({0, 2}));
    r.set_sym(0, 3, VertexSet::of({0, 2, 3}));
    r.set_sym(1, 2, VertexSet::of({1, 2}));
    r.set_sym(1, 3, VertexSet::of({1, 2, 3}));
    r.set_sym(2, 3, VertexSet::of({2, 3}));
    return {"ex1",
            "4-point function violating t1 only: v is missing from R(u,v)",
            {"u", "v", "x", "y"},
            r,
            {A::t2, A::t3, A::b3, A::J0p, A::ta, A::br, A::brp},
            {A::t1},
            {1, 0}};
}

Fixture make_ex2() {
    TransitFunction r = base(4); // u,v,x,y
    r.set_sym(0, 1, VertexSet::of({0, 1}));
    r.set(0, 2, VertexSet::of({0, 1, 2}));
    r.set(2, 0, VertexSet::of({0, 2}));
    r.set_sym(0, 3, VertexSet::of({0, 1, 2, 3}));
    r.set_sym(1, 2, VertexSet::of({1, 2}));
    r.set(1, 3, VertexSet::of({1, 2, 3}));
    r.set(3, 1, VertexSet::of({1, 3}));
    r.set_sym(2, 3, VertexSet::of({2, 3}));
    return {"ex2",
            "4-point function violating t2 only: R(u,x) differs from R(x,u)",
            {"u", "v", "x", "y"},
            r,
            {A::t1, A::t3, A::b3, A::J0p, A::ta},
            {A::t2},
            {0, 2}};
}

Fixture make_ex3() {
    TransitFunction r = base(4); // u,v,x,y
    r.set_sym(0, 0, VertexSet::of({0, 1}));
    r.set_sym(0, 1, VertexSet::of({0, 1}));
    r.set_sym(0, 2, VertexSet::of({0, 2}));
    r.set_sym(0, 3, VertexSet::of({0, 3}));
    r.set_sym(1, 2, VertexSet::of({1, 0, 2}));
    r.set_sym(1, 3, VertexSet::of({1, 0, 3}));
    r.set_sym(2, 3, VertexSet::of({2, 3}));
    return {"ex3",
            "4-point function violating t3 only: R(u,u) = {u,v}",
            {"u", "v", "x", "y"},
            r,
            {A::t1, A::t2, A::J0p, A::ta},
            {A::t3},
            {0}};
}

Fixture make_ex4() {
    TransitFunction r = base(6); // u,v,w,x,y,z -> 0..5
    r.set_sym(0, 1, VertexSet::of({0, 2, 1, 5}));
    r.set_sym(3, 1, VertexSet::of({3, 2, 4, 1}));
    r.set_sym(3, 5, VertexSet::of({3, 4, 0, 5}));
    r.set_sym(2, 5, VertexSet::of({2, 0, 1, 5}));
    r.set_sym(2, 4, VertexSet::of({2, 3, 1, 4}));
    return {"ex4",
            "6-point function violating J0p only; all other listed axioms hold",
            {"u", "v", "w", "x", "y", "z"},
            r,
            {A::t1, A::t2, A::t3, A::b3},
            {A::J0p},
            {}};
}

Fixture make_ex5() {
    TransitFunction r = base(5); // u,v,w,x,y
    r.set_sym(0, 2, VertexSet::of({0, 3, 4, 2}));
    r.set_sym(1, 3, VertexSet::of({1, 4, 2, 3}));
    return {"ex5",
            "5-point function violating ta only",
            {"u", "v", "w", "x", "y"},
            r,
            {A::t1, A::t2, A::t3, A::b3, A::J0p},
            {A::ta},
            {0, 1, 2}};
}

Fixture make_ex6() {
    TransitFunction r = base(5); // u,v,w,x,y
    r.set_sym(0, 4, VertexSet::of({0, 3, 4, 2}));
    r.set_sym(3, 1, VertexSet::of({3, 4, 1, 2}));
    r.set_sym(0, 1, VertexSet::universe(5));
    return {"ex6",
            "5-point function violating b3 only",
            {"u", "v", "w", "x", "y"},
            r,
            {A::t1, A::t2, A::t3, A::J0p, A::ta},
            {A::b3},
            {0, 1, 4, 2}};
}

Fixture make_e1() {
    TransitFunction r = interval_function(make_cycle(8));
    return {"e1",
            "geodesic intervals of the 8-cycle: J0p fails, the rest of the profile holds",
            {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"},
            r,
            {A::t1, A::t2, A::t3, A::br, A::brp, A::ta, A::b3},
            {A::J0p},
            {0, 2, 3, 5}};
}

Fixture make_e2() {
    TransitFunction r = base(5); // u,v,w,x,y
    r.set_sym(0, 2, VertexSet::of({0, 4, 2}));
    r.set_sym(1, 3, VertexSet::of({1, 4, 2, 3}));
    r.set_sym(0, 3, VertexSet::of({0, 4, 3}));
    return {"e2",
            "5-point function violating ta only, with br and brp intact",
            {"u", "v", "w", "x", "y"},
            r,
            {A::t1, A::t2, A::t3, A::b3, A::br, A::brp, A::J0p},
            {A::ta},
            {0, 1, 2}};
}

Fixture make_e3() {
    Fixture f = make_ex6();
    f.name = "e3";
    f.summary = "5-point function violating b3 only, with br and brp intact";
    f.holds = {A::t1, A::t2, A::t3, A::J0p, A::br, A::brp, A::ta};
    return f;
}

Fixture make_e4() {
    TransitFunction r = base(6); // u,v,x,y,z,w -> 0..5
    r.set_sym(0, 3, VertexSet::of({0, 2, 4, 3}));
    r.set_sym(0, 1, VertexSet::of({0, 1, 4, 5}));
    r.set_sym(2, 1, VertexSet::of({2, 3, 4, 1}));
    r.set_sym(2, 5, VertexSet::of({2, 5, 4, 0}));
    r.set_sym(5, 3, VertexSet::of({5, 3, 4, 1}));
    return {"e4",
            "6-point function violating br only",
            {"u", "v", "x", "y", "z", "w"},
            r,
            {A::t1, A::t2, A::t3, A::J0p, A::ta, A::b3},
            {A::br},
            {}};
}

Fixture make_e5() {
    TransitFunction r = base(4); // u,v,x,z
    r.set_sym(0, 1, VertexSet::universe(4));
    r.set_sym(2, 3, VertexSet::universe(4));
    return {"e5",
            "4-point function violating brp only",
            {"u", "v", "x", "z"},
            r,
            {A::t1, A::t2, A::t3, A::J0p, A::ta, A::b3},
            {A::brp},
            {0, 1, 2, 3}};
}

} // namespace

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> all = {
        make_ex31(), make_ex1(), make_ex2(), make_ex3(), make_ex4(), make_ex5(),
        make_ex6(),  make_e1(),  make_e2(),  make_e3(),  make_e4(),  make_e5(),
    };
    return all;
}

const Fixture& load_fixture(std::string_view name) {
    for (const Fixture& f : fixture_catalog())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

} // namespace mgt
