#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecohom/cecomplex.hpp"

namespace liecohom {

struct CohomologyResult {
    Index degree = 0;
    Index betti = 0;
    std::vector<Cochain> representatives;
    bool relative = false;
    std::string module_spec;
};

/// The (relative) Chevalley–Eilenberg complex of a module, with the
/// differential restricted to the relative levels.
///
/// Levels and restricted differentials are computed on construction for the
/// requested degree window only.
class Complex {
public:
    /// Builds levels lo−1 .. hi+1 (clamped to 0..dim g).
    Complex(const GModule& v, const std::optional<Subalgebra>& h, Index lo, Index hi);
    Complex(const GModule& v, const std::optional<Subalgebra>& h);

    const GModule& module() const { return module_; }
    bool relative() const { return relative_; }
    Index top_degree() const { return module_.algebra().dim(); }

    /// Columns span the level in full coordinates.
    const Matrix& level_basis(Index k) const;
    Index level_dim(Index k) const;
    /// δ_k in level-basis coordinates (level_dim(k+1) × level_dim(k)).
    const Matrix& restricted_differential(Index k) const;
    Index differential_rank(Index k) const;

    Index betti(Index k) const;
    CohomologyResult cohomology(Index k, bool with_representatives = true) const;

private:
    bool in_window(Index k) const { return k >= lo_ && k <= hi_; }

    GModule module_;
    bool relative_;
    Index lo_, hi_;
    std::vector<Matrix> bases_;
    std::vector<Matrix> differentials_;
    std::vector<Index> ranks_;
};

/// H^k(g;V), or H^k(g,h;V) when h is given.
CohomologyResult cohomology(const GModule& v, Index k, const std::optional<Subalgebra>& h = std::nullopt,
                            bool with_representatives = true);

/// Betti numbers for degrees 0..dim g, or 0..dim g − dim h for relative cohomology (higher
/// relative levels are zero).
std::vector<Index> betti_numbers(const GModule& v, const std::optional<Subalgebra>& h = std::nullopt);

struct KillingThreeForm {
    Cochain form;
    bool closed = false;
    bool class_nonzero = false;
};

/// κ(X,Y,Z) = B([X,Y],Z). Throws NotSemisimple.
KillingThreeForm killing_three_form(const LieAlgebra& g);

struct VolumeForm {
    Index top_degree = 0;
    Index dim_top_relative = 0;
    std::optional<Cochain> form;
};

/// Top-degree relative forms with trivial coefficients (degree dim g − dim h).
VolumeForm invariant_volume_form(const Subalgebra& h);

struct DualityReport {
    Index left = 0;
    Index right = 0;
    bool equal = false;
};

/// Compares dim H^k(g,h;V) with dim H^{n−k}(g,h;V*), n = dim g − dim h.
DualityReport duality_report(const Subalgebra& h, const GModule& v, Index k);

} // namespace liecohom
