#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "liecohom/extensions.hpp"

namespace liecohom {

/// Current version of the algebra and module file formats.
inline constexpr int file_format_version = 1;

/// Contents of an algebra file.
///
/// JSON layout (indices are 0-based, rationals are "p/q" or integer strings):
///
///     {
///       "format": "liecohom-algebra", "version": 1,
///       "name": "sl2", "dim": 3, "basis": ["H", "E", "F"],
///       "brackets": { "[0,1]": {"1": "2"}, "[0,2]": {"2": "-2"}, "[1,2]": {"0": "1"} },
///       "h_subalgebra": [["0", "1", "-1"]]          // optional
///     }
struct AlgebraFile {
    std::string name;
    LieAlgebra algebra;
    std::optional<Subalgebra> h;
};

/// Throws ParseError (syntax, missing/ill-typed fields) or ValidationError
/// (Jacobi, subalgebra closure).
AlgebraFile parse_algebra_json(std::string_view text, std::string_view source = "<input>");
AlgebraFile read_algebra_file(const std::filesystem::path& path);
std::string write_algebra_json(const AlgebraFile& file);
AlgebraFile to_algebra_file(const CatalogEntry& entry);

/// Module file: {"format": "liecohom-module", "version": 1, "vdim": n,
/// "actions": [ [[row], ...] per basis vector ]}.
GModule parse_module_json(const LieAlgebra& g, std::string_view text, std::string_view source = "<input>");

/// Resolves "trivial", "trivial:n", "adjoint", "coadjoint", "dual:<spec>",
/// "sum:<spec>+<spec>+…", "file:<path>" or a path ending in ".json".
/// Relative paths are resolved against `base_dir`. Throws UnknownModuleSpec.
GModule parse_module_spec(const LieAlgebra& g, std::string_view spec,
                          const std::filesystem::path& base_dir = std::filesystem::path("."));

std::string read_text_file(const std::filesystem::path& path);

/// 64-bit FNV-1a digest in hex, used to fingerprint report inputs.
std::string digest_hex(std::string_view bytes);

} // namespace liecohom
