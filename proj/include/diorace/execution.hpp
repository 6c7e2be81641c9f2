#ifndef DIORACE_EXECUTION_HPP
#define DIORACE_EXECUTION_HPP

namespace diorace {

/// Selects the serial reference kernels or their OpenMP counterparts.
/// Results never depend on this choice.
enum class Execution { Serial, Parallel };

}  // namespace diorace

#endif
