#pragma once

#include "flopcheck/verify.hpp"

namespace flopcheck {

enum class ReportFormat { Text, Json, Markdown };

std::string render_report(const std::vector<CaseReport>& reports, ReportFormat fmt,
                          bool with_steps = false);

}  // namespace flopcheck
