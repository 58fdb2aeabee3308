#include "liecohom/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace liecohom {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& field, const std::string& what)
{
    throw ParseError(std::string(source) + ": field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, std::string_view source)
{
    if (!obj.is_object() || !obj.contains(key))
        fail(source, key, "missing");
    return obj.at(key);
}

Rational rational_field(const json& value, std::string_view source, const std::string& field)
{
    try {
        if (value.is_string())
            return Rational::parse(value.get<std::string>());
        if (value.is_number_integer())
            return Rational(value.get<long>());
    } catch (const ParseError& e) {
        fail(source, field, e.what());
    }
    fail(source, field, "expected a rational string \"p/q\" or an integer");
}

Index index_field(std::string_view text, std::string_view source, const std::string& field)
{
    Index v = 0;
    std::size_t used = 0;
    try {
        v = std::stol(std::string(text), &used);
    } catch (const std::exception&) {
        fail(source, field, "expected a 0-based index");
    }
    if (used != text.size() || v < 0)
        fail(source, field, "expected a 0-based index");
    return v;
}

void check_header(const json& doc, std::string_view expected_format, std::string_view source)
{
    const json& format = require(doc, "format", source);
    if (!format.is_string() || format.get<std::string>() != expected_format)
        fail(source, "format", "expected \"" + std::string(expected_format) + "\"");
    const json& version = require(doc, "version", source);
    if (!version.is_number_integer() || version.get<int>() != file_format_version)
        fail(source, "version", "unsupported version (expected " + std::to_string(file_format_version) + ")");
}

json parse_json(std::string_view text, std::string_view source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(source) + ": " + e.what());
    }
}

} // namespace

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraFile parse_algebra_json(std::string_view text, std::string_view source)
{
    const json doc = parse_json(text, source);
    check_header(doc, "liecohom-algebra", source);

    const json& name = require(doc, "name", source);
    if (!name.is_string())
        fail(source, "name", "expected a string");
    const json& dim_field = require(doc, "dim", source);
    if (!dim_field.is_number_integer() || dim_field.get<long>() < 0 || dim_field.get<long>() > max_algebra_dim)
        fail(source, "dim", "expected an integer in 0.." + std::to_string(max_algebra_dim));
    const Index dim = dim_field.get<long>();

    const json& basis = require(doc, "basis", source);
    if (!basis.is_array() || static_cast<Index>(basis.size()) != dim)
        fail(source, "basis", "expected an array of " + std::to_string(dim) + " names");
    std::vector<std::string> names;
    for (const auto& b : basis) {
        if (!b.is_string())
            fail(source, "basis", "names must be strings");
        names.push_back(b.get<std::string>());
    }

    BracketTable table;
    const json& brackets = require(doc, "brackets", source);
    if (!brackets.is_object())
        fail(source, "brackets", "expected an object keyed by \"[i,j]\"");
    for (const auto& [key, coeffs] : brackets.items()) {
        const std::string field = "brackets." + key;
        if (key.size() < 5 || key.front() != '[' || key.back() != ']' || key.find(',') == std::string::npos)
            fail(source, field, "key must look like \"[i,j]\"");
        const auto comma = key.find(',');
        const Index i = index_field(std::string_view(key).substr(1, comma - 1), source, field);
        const Index j = index_field(std::string_view(key).substr(comma + 1, key.size() - comma - 2), source, field);
        if (i >= j || j >= dim)
            fail(source, field, "need 0 <= i < j < dim");
        if (!coeffs.is_object())
            fail(source, field, "expected an object {index: rational}");
        Vector v = Vector::Zero(dim);
        for (const auto& [idx, value] : coeffs.items()) {
            const Index m = index_field(idx, source, field);
            if (m >= dim)
                fail(source, field, "coefficient index " + idx + " out of range");
            v(m) = rational_field(value, source, field + "." + idx);
        }
        table[{i, j}] = v;
    }

    AlgebraFile file{name.get<std::string>(), LieAlgebra::validate(std::move(names), table), std::nullopt};

    if (doc.contains("h_subalgebra")) {
        const json& hs = doc.at("h_subalgebra");
        if (!hs.is_array())
            fail(source, "h_subalgebra", "expected an array of coordinate vectors");
        std::vector<Vector> vectors;
        for (std::size_t r = 0; r < hs.size(); ++r) {
            const std::string field = "h_subalgebra[" + std::to_string(r) + "]";
            if (!hs[r].is_array() || static_cast<Index>(hs[r].size()) != dim)
                fail(source, field, "expected " + std::to_string(dim) + " coordinates");
            Vector v(dim);
            for (Index c = 0; c < dim; ++c)
                v(c) = rational_field(hs[r][static_cast<std::size_t>(c)], source, field);
            vectors.push_back(std::move(v));
        }
        file.h = Subalgebra::make(file.algebra, std::move(vectors));
    }
    return file;
}

AlgebraFile read_algebra_file(const std::filesystem::path& path)
{
    return parse_algebra_json(read_text_file(path), path.string());
}

std::string write_algebra_json(const AlgebraFile& file)
{
    const LieAlgebra& g = file.algebra;
    json doc;
    doc["format"] = "liecohom-algebra";
    doc["version"] = file_format_version;
    doc["name"] = file.name;
    doc["dim"] = g.dim();
    doc["basis"] = g.basis_names();
    json brackets = json::object();
    for (const auto& [pair, value] : g.brackets()) {
        json coeffs = json::object();
        for (Index m = 0; m < value.size(); ++m)
            if (!value(m).is_zero())
                coeffs[std::to_string(m)] = value(m).str();
        brackets["[" + std::to_string(pair.first) + "," + std::to_string(pair.second) + "]"] = coeffs;
    }
    doc["brackets"] = brackets;
    if (file.h) {
        json hs = json::array();
        for (const auto& v : file.h->vectors()) {
            json row = json::array();
            for (Index m = 0; m < v.size(); ++m)
                row.push_back(v(m).str());
            hs.push_back(row);
        }
        doc["h_subalgebra"] = hs;
    }
    return doc.dump(2) + "\n";
}

AlgebraFile to_algebra_file(const CatalogEntry& entry)
{
    return AlgebraFile{entry.name, entry.algebra, entry.h};
}

GModule parse_module_json(const LieAlgebra& g, std::string_view text, std::string_view source)
{
    const json doc = parse_json(text, source);
    check_header(doc, "liecohom-module", source);
    const json& vdim_field = require(doc, "vdim", source);
    if (!vdim_field.is_number_integer() || vdim_field.get<long>() < 0)
        fail(source, "vdim", "expected a nonnegative integer");
    const Index vdim = vdim_field.get<long>();
    const json& actions = require(doc, "actions", source);
    if (!actions.is_array() || static_cast<Index>(actions.size()) != g.dim())
        fail(source, "actions", "expected one matrix per basis vector (" + std::to_string(g.dim()) + ")");
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < actions.size(); ++i) {
        const std::string field = "actions[" + std::to_string(i) + "]";
        const json& m = actions[i];
        if (!m.is_array() || static_cast<Index>(m.size()) != vdim)
            fail(source, field, "expected " + std::to_string(vdim) + " rows");
        Matrix a(vdim, vdim);
        for (Index r = 0; r < vdim; ++r) {
            const json& row = m[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Index>(row.size()) != vdim)
                fail(source, field, "row " + std::to_string(r) + " must have " + std::to_string(vdim) + " entries");
            for (Index c = 0; c < vdim; ++c)
                a(r, c) = rational_field(row[static_cast<std::size_t>(c)], source, field);
        }
        mats.push_back(std::move(a));
    }
    return GModule::make(g, std::move(mats), "file:" + std::string(source));
}

GModule parse_module_spec(const LieAlgebra& g, std::string_view spec, const std::filesystem::path& base_dir)
{
    const auto starts = [&](std::string_view p) { return spec.substr(0, p.size()) == p; };
    if (spec == "trivial")
        return trivial_module(g);
    if (starts("trivial:")) {
        const std::string_view arg = spec.substr(8);
        Index n = 0;
        std::size_t used = 0;
        try {
            n = std::stol(std::string(arg), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != arg.size() || n < 1)
            throw UnknownModuleSpec("bad trivial module size in '" + std::string(spec) + "'");
        return trivial_module(g, n);
    }
    if (spec == "adjoint")
        return adjoint_module(g);
    if (spec == "coadjoint")
        return coadjoint_module(g);
    if (starts("dual:"))
        return dual_module(parse_module_spec(g, spec.substr(5), base_dir));
    if (starts("sum:")) {
        std::vector<GModule> parts;
        std::string_view rest = spec.substr(4);
        while (true) {
            const auto plus = rest.find('+');
            const std::string_view part = rest.substr(0, plus);
            if (part.empty())
                throw UnknownModuleSpec("empty summand in '" + std::string(spec) + "'");
            parts.push_back(parse_module_spec(g, part, base_dir));
            if (plus == std::string_view::npos)
                break;
            rest = rest.substr(plus + 1);
        }
        return direct_sum(parts);
    }
    std::filesystem::path file;
    if (starts("file:"))
        file = std::string(spec.substr(5));
    else if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        file = std::string(spec);
    else
        throw UnknownModuleSpec("unknown module spec '" + std::string(spec) + "'");
    if (file.is_relative())
        file = base_dir / file;
    return parse_module_json(g, read_text_file(file), file.string());
}

std::string digest_hex(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace liecohom
