#pragma once

#include <string>

#include "idealkit/report.hpp"

namespace idealkit {

// Golden checks for the worked monomial examples.
Report run_verify();

// {"schema_version": 1, "checks": [{name, passed, expected, actual}], "passed": bool}
std::string verify_json(const Report& report);

}  // namespace idealkit
