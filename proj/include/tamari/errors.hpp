#pragma once

#include <stdexcept>
#include <string>

namespace tamari {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleOrSymmetry : Error {
    int a, b;
    CycleOrSymmetry(int a_, int b_)
        : Error("relations " + std::to_string(a_) + "<" + std::to_string(b_) + " and " +
                std::to_string(b_) + "<" + std::to_string(a_) + " both derivable"),
          a(a_), b(b_) {}
};

struct TamariAxiomViolated : Error {
    int a, b, c;
    TamariAxiomViolated(int a_, int b_, int c_)
        : Error("Tamari axiom violated at (" + std::to_string(a_) + "," + std::to_string(b_) + "," +
                std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct NotComparable : Error {
    int a, b;
    NotComparable(int a_, int b_)
        : Error("bounds are not comparable, clash at (" + std::to_string(a_) + "," +
                std::to_string(b_) + ")"),
          a(a_), b(b_) {}
};

struct RParameterOutOfRange : Error {
    int r, max;
    RParameterOutOfRange(int r_, int max_)
        : Error("r = " + std::to_string(r_) + " outside [0, " + std::to_string(max_) + "]"),
          r(r_), max(max_) {}
};

struct InvalidLabels : Error {
    int node;
    explicit InvalidLabels(int node_)
        : Error("label budget violated at node " + std::to_string(node_)), node(node_) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what = "empty interval-poset") : Error(what) {}
};

struct NoInversions : Error {
    NoInversions() : Error("interval-poset has no Tamari inversion") {}
};

struct ParseError : Error {
    using Error::Error;
};

struct NotRiseDivisible : Error {
    using Error::Error;
};

struct NotMDivisible : Error {
    using Error::Error;
};

struct NotMInterval : Error {
    using Error::Error;
};

struct SizeNotDivisible : Error {
    using Error::Error;
};

}
