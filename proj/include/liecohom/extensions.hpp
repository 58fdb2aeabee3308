#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecohom/cohomology.hpp"

namespace liecohom {

/// The pair (g_R, h_R): g_R = g ⊕ ℝ^rank with central generators c_1..c_rank,
/// and h_R spanned by h together with r_i + Σ_a mixing(a, i) c_a.
struct ExtensionPair {
    LieAlgebra base;
    LieAlgebra g_R;
    Subalgebra h_R;
    std::vector<Vector> r_basis; // in coordinates of base
    Index rank = 0;
    Index dim_X = 0;
};

/// Throws RNotAbelian, RNotCommutingWithH, MixingRankDeficient or
/// DimensionMismatch.
ExtensionPair central_extension(const LieAlgebra& g, const Subalgebra& h, const std::vector<Vector>& r_basis,
                                Index rank, const Matrix& mixing);

/// Same algebra, but with h_R = h ⊕ r: the central directions are left out
/// of the isotropy. Negative control for the vanishing checks.
ExtensionPair without_diagonal(const ExtensionPair& pair);

/// Same algebra, with h_R spanned by the central generators alone.
ExtensionPair center_only(const ExtensionPair& pair);

/// sl2 irreducible of highest weight `weight` (dimension weight + 1) over
/// the catalog sl2 basis (H, E, F).
GModule sl2_irrep(const LieAlgebra& sl2, Index weight);

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<Subalgebra> h;
    std::optional<ExtensionPair> extension;

    // Annotations. Checkable ones are verified by the test suite.
    std::optional<bool> semisimple;
    bool compact_h = false;
    std::vector<GModule> irreducible_modules;
    /// Expected Betti tables keyed by "trivial", "adjoint", "relative:trivial", ...
    std::map<std::string, std::vector<Index>> expected_betti;
};

/// Names accepted by builtin(); parameterized ones are shown with a sample argument.
std::vector<std::string> builtin_names();

/// Throws UnknownName, or ValidationError for a bad parameter (e.g. α = 0).
CatalogEntry builtin(std::string_view name);

/// The standard extensions: sl2R_ext and fivedim_ext:α.
ExtensionPair sl2_real_extension();
ExtensionPair fivedim_extension(const Rational& alpha);

struct VanishingReport {
    Index dim_X = 0;
    Index h1_adjoint = 0;
    Index top_minus_one_coadjoint = 0;
    DualityReport duality;
    Index volume_form_dim = 0;
    bool pass = false;
};

/// H^1(g_R,h_R; g_R), H^{dim X − 1}(g_R,h_R; g_R*), the k = 1 duality report
/// and the dimension of top-degree relative forms. Passes when both Betti
/// numbers vanish and the volume form is unique up to scale.
VanishingReport verify_vanishing(const ExtensionPair& pair, CoadjointSign sign = CoadjointSign::NegativeTranspose);

} // namespace liecohom
