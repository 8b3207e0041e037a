#pragma once

// Small algebras written out by hand, independent of the catalog module.

#include "tanaka/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using tanaka::Algebra;
using tanaka::BasisElement;
using tanaka::Scalar;
using tanaka::StructureConstants;
using tanaka::Terms;

inline Algebra make(std::string name, std::vector<BasisElement> basis,
                    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Terms>> br) {
    StructureConstants sc;
    for (auto& [k, t] : br) sc[k] = t;
    return Algebra(std::move(name), std::move(basis), sc);
}

// X:-1 Y:-1 Z:-2, [X,Y] = Z
inline Algebra heisenberg3() {
    return make("heisenberg3", {{"X", -1}, {"Y", -1}, {"Z", -2}}, {{{0, 1}, {{2, Scalar(1)}}}});
}

// X:-1 Z1:-1 Z2:-2 Z3:-3, [X,Z1] = Z2, [X,Z2] = Z3
inline Algebra goursat4() {
    return make("goursat4", {{"X", -1}, {"Z1", -1}, {"Z2", -2}, {"Z3", -3}},
                {{{0, 1}, {{2, Scalar(1)}}}, {{0, 2}, {{3, Scalar(1)}}}});
}

// X1 X2 X3 : -1, X12 X13 X23 : -2
inline Algebra free2step3() {
    return make("free2step3", {{"X1", -1}, {"X2", -1}, {"X3", -1}, {"X12", -2}, {"X13", -2}, {"X23", -2}},
                {{{0, 1}, {{3, Scalar(1)}}}, {{0, 2}, {{4, Scalar(1)}}}, {{1, 2}, {{5, Scalar(1)}}}});
}

inline Algebra abelian2() { return make("abelian2", {{"A", -1}, {"B", -1}}, {}); }

inline tanaka::Vector vec(std::initializer_list<long> xs) {
    tanaka::Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace fixtures
