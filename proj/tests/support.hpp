#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "wreath/io.hpp"
#include "wreath/sampler.hpp"

namespace testsupport {

using namespace wreath;

inline Vec qv(std::initializer_list<const char*> coords) {
    Vec out;
    for (const char* c : coords)
        out.push_back(parse_rational(c));
    return out;
}

inline Vec unit(std::size_t dim, std::size_t i) {
    Vec out = zero_vec(dim);
    out[i] = 1;
    return out;
}

inline LieAlgebra sl2() {
    return LieAlgebra::from_pairs("sl2", {"h", "e", "f"},
                                  {{0, 1, qv({"0", "2", "0"})},
                                   {0, 2, qv({"0", "0", "-2"})},
                                   {1, 2, qv({"1", "0", "0"})}});
}

inline LieAlgebra heisenberg() {
    return LieAlgebra::from_pairs("heisenberg", {"e1", "e2", "e3"},
                                  {{0, 1, qv({"0", "0", "1"})}});
}

// [x, y] = y: the nonabelian algebra in dimension 2.
inline LieAlgebra solvable2() {
    return LieAlgebra::from_pairs("solvable2", {"x", "y"}, {{0, 1, qv({"0", "1"})}});
}

// [e3, e1] = e1 and [e3, e2] = e2.
inline LieAlgebra solvable3() {
    return LieAlgebra::from_pairs("solvable3", {"e1", "e2", "e3"},
                                  {{0, 2, qv({"-1", "0", "0"})},
                                   {1, 2, qv({"0", "-1", "0"})}});
}

} // namespace testsupport
