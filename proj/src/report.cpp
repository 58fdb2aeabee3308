#include "liecohom/report.hpp"

#include <algorithm>
#include <sstream>

#include "liecohom/errors.hpp"

namespace liecohom {

namespace {

bool valid_key(std::string_view key)
{
    return !key.empty() && std::none_of(key.begin(), key.end(), [](char c) {
        return c == ':' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    });
}

} // namespace

Report::Report(std::string command) { add("command", std::move(command)); }

void Report::add(std::string key, std::string value)
{
    if (!valid_key(key))
        throw Error("invalid report key '" + key + "'");
    std::replace(value.begin(), value.end(), '\n', ' ');
    std::replace(value.begin(), value.end(), '\r', ' ');
    entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Report::get(std::string_view key) const
{
    for (const auto& [k, v] : entries_)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string Report::to_machine() const
{
    std::ostringstream os;
    os << header << "\n";
    for (const auto& [k, v] : entries_)
        os << k << ": " << v << "\n";
    return os.str();
}

std::string Report::to_human() const
{
    std::size_t width = 0;
    for (const auto& [k, v] : entries_)
        width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : entries_)
        os << k << ":" << std::string(width - k.size() + 1, ' ') << v << "\n";
    return os.str();
}

Report Report::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw ParseError("report does not start with '" + std::string(header) + "'");
    std::vector<std::pair<std::string, std::string>> entries;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto sep = line.find(": ");
        if (sep == std::string::npos || !valid_key(std::string_view(line).substr(0, sep)))
            throw ParseError("report line " + std::to_string(lineno) + " is not 'key: value'");
        entries.emplace_back(line.substr(0, sep), line.substr(sep + 2));
    }
    if (entries.empty() || entries.front().first != "command")
        throw ParseError("report has no command entry");
    Report r(entries.front().second);
    r.entries_ = std::move(entries);
    return r;
}

} // namespace liecohom
