#ifndef HOPFACT_CONFIG_HPP
#define HOPFACT_CONFIG_HPP

#include <cstdint>

namespace hopfact {

/// Bounds and knobs shared by the library operations. Defaults match the
/// documented CLI defaults.
struct RunConfig {
  /// Largest Hopf algebra dimension that will be materialized.
  int64_t materialization_bound = 2000;
  /// Largest group order for which full decomposition tables are built.
  int64_t factor_table_bound = 10000;
  /// Cap on coset/orbit enumeration.
  int64_t coset_bound = 1000000;
  /// Thread cap for the scans that run in parallel; 0 = use HOPFACT_THREADS
  /// from the environment, falling back to the hardware count.
  int threads = 0;
};

/// Effective thread count for cfg (>= 1, deterministic results either way).
int effective_threads(const RunConfig& cfg);

}  // namespace hopfact

#endif
