#pragma once

#include <initializer_list>

#include "liecohom/extensions.hpp"

namespace testing {

using namespace liecohom;

inline Vector vec(std::initializer_list<long> xs)
{
    Vector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long x : xs)
        v(i++) = Rational(x);
    return v;
}

inline Matrix mat(Index rows, Index cols, std::initializer_list<long> xs)
{
    Matrix m(rows, cols);
    auto it = xs.begin();
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = Rational(*it++);
    return m;
}

inline LieAlgebra sl2() { return builtin("sl2").algebra; }
inline LieAlgebra so3() { return builtin("so3").algebra; }
inline LieAlgebra heis3() { return builtin("heis3").algebra; }

/// Built-in algebras small enough for the brute-force oracle.
inline std::vector<std::string> small_builtins()
{
    return {"sl2", "so3", "heis3", "abelian:1", "abelian:2", "abelian:3", "sl2R_ext"};
}

/// Modules every identity is checked on.
inline std::vector<GModule> standard_modules(const CatalogEntry& entry)
{
    std::vector<GModule> out{trivial_module(entry.algebra), adjoint_module(entry.algebra),
                             coadjoint_module(entry.algebra)};
    out.insert(out.end(), entry.irreducible_modules.begin(), entry.irreducible_modules.end());
    return out;
}

} // namespace testing
