#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liecohom/extensions.hpp"
#include "liecohom/report.hpp"

namespace liecohom {

/// Knobs for the reproducibility table. The two mutation switches exist so
/// the suite can demonstrate that it is sensitive to the conventions it
/// checks.
struct VerifyOptions {
    CoadjointSign coadjoint_sign = CoadjointSign::NegativeTranspose;
    bool omit_diagonal = false;
    std::size_t random_samples = 200;
    std::uint64_t seed = 0x5eed2024;
};

struct VerifyRow {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string detail;
};

/// The operator-identity rows alone: every built-in with its standard
/// modules at every degree, plus options.random_samples random cases.
std::vector<VerifyRow> identity_rows(const VerifyOptions& options = {});

/// Runs every row of the reproducibility table, in a fixed order.
std::vector<VerifyRow> verify_paper(const VerifyOptions& options = {});

Report verify_report(const std::vector<VerifyRow>& rows);

bool all_pass(const std::vector<VerifyRow>& rows);

} // namespace liecohom
