#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liecohom {

/// Ordered key/value report emitted by the CLI.
///
/// The machine format is line oriented:
///
///     liecohom-report/1
///     command: cohomology
///     betti.0: 1
///
/// Keys contain no ':' and no whitespace; values are single-line strings.
class Report {
public:
    static constexpr std::string_view header = "liecohom-report/1";

    explicit Report(std::string command);

    void add(std::string key, std::string value);
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    std::optional<std::string> get(std::string_view key) const;

    std::string to_machine() const;
    /// Aligned "key: value" listing for terminals.
    std::string to_human() const;

    /// Inverse of to_machine(). Throws ParseError.
    static Report parse(std::string_view text);

    friend bool operator==(const Report& a, const Report& b) { return a.entries_ == b.entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

} // namespace liecohom
