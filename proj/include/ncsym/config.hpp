#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncsym {

// Thrown when a computation would exceed a configured resource guard.
// The message names the guard and the limit so callers can report it.
class GuardLimitError : public std::runtime_error {
  public:
    explicit GuardLimitError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { Text, Json };

// Resource guards and run-wide knobs.  Defaults keep every built-in
// computation at desk scale; callers may raise them explicitly.
struct RunConfig {
    int degree_guard = 12;            // max degree for partition enumeration
    int subset_guard = 20;            // max |E| for 2^|E| edge-subset scans
    long long word_guard = 1000000;   // max n_vars^degree for word expansion
    int orientation_guard = 20;       // max non-loop edges for orientation scans
    long long positivity_budget = 5040;  // relabelings tried by the witness search
    std::uint64_t seed = 20250825;    // RNG seed for sampled verification
    OutputFormat format = OutputFormat::Text;
};

inline const RunConfig& default_config() {
    static const RunConfig cfg{};
    return cfg;
}

}  // namespace ncsym
