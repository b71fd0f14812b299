#pragma once

namespace minhom {

/// Selects the serial reference kernel or its OpenMP counterpart. Both
/// return identical results; the serial one is kept as the test reference.
enum class Exec { serial, parallel };

} // namespace minhom
