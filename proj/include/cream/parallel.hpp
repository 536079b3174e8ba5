#pragma once

namespace cream {

// Execution policy for the data-parallel kernels. Every parallel path has a
// serial twin with identical output; `parallel` silently degrades to serial
// when the build has no OpenMP.
enum class Exec { serial, parallel };

int max_threads() noexcept;

}  // namespace cream
