#pragma once

#include <iosfwd>
#include <string>

#include "pdmsusy/config.hpp"
#include "pdmsusy/verify.hpp"

namespace pdmsusy {

enum class Command { Spectrum, Partners, Verify, Sweep };

/// Fixed 12-significant-digit decimal formatting shared by every emitter.
std::string fmt12(double v);

/// Serialized CheckReport: config echo (with the resolved grid), the
/// sorted check results, and the overall conjunction.
std::string report_json(const CheckReport& report);

/// Runs one command against a parsed config, writing data rows to `out`
/// and diagnostics to `err`. Data is emitted atomically: nothing reaches
/// `out` when the run fails. Returns the process exit code: 0 success,
/// 1 verification failure, 2 config or numerical error.
int execute(Command command, const RunConfig& cfg, std::ostream& out,
            std::ostream& err);

}  // namespace pdmsusy
