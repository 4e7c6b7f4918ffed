#pragma once

namespace unitals {

/// Every hot kernel has a serial reference path and an OpenMP path; both
/// produce identical output.
enum class Exec { Serial, Parallel };

/// Worker count for the OpenMP paths (0 leaves the runtime default).
void set_workers(int workers);
int workers();

}  // namespace unitals
