#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace klab::cli {

/// Re-derives every certification of a report from its payload and its inputs. Inputs are
/// rebuilt from the specs recorded in the report unless overridden with "role=path" (a bare
/// path is accepted when the report has a single input). Returns 0 when every certification
/// reproduces and holds, 2 on any mismatch (including input digests) or failing
/// certification, 1 on malformed reports.
int verify_report(const std::string& report_path, const std::vector<std::string>& inputs, std::ostream& out,
                  std::ostream& err);

}  // namespace klab::cli
