#ifndef PTQM_ERRORS_HPP
#define PTQM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptqm {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Grid construction: even node count, non-positive extent, too few nodes.
struct invalid_grid : error {
  explicit invalid_grid(const std::string& msg) : error(msg) {}
};

// Potential specification: parity violations, delta outside the grid,
// tabulated sample length mismatch.
struct invalid_potential : error {
  explicit invalid_potential(const std::string& msg) : error(msg) {}
};

// Operation applied to a wavefunction in the wrong space.
struct space_mismatch : error {
  explicit space_mismatch(const std::string& msg) : error(msg) {}
};

// Two sampled functions live on different grids.
struct grid_mismatch : error {
  explicit grid_mismatch(const std::string& msg) : error(msg) {}
};

// Momentum-space kernel requested for a potential whose transform is
// distributional (polynomial terms).
struct non_integrable_potential : error {
  explicit non_integrable_potential(const std::string& msg) : error(msg) {}
};

// Metric operator fails its Hermiticity (or involution) requirement.
struct invalid_metric : error {
  explicit invalid_metric(const std::string& msg) : error(msg) {}
};

// Dense eigensolver failure, reported with the offending LAPACK info code.
struct eigensolve_failure : error {
  explicit eigensolve_failure(const std::string& msg) : error(msg) {}
};

// Biorthogonal normalization impossible: coalesced eigenvectors.
struct defective_matrix : error {
  explicit defective_matrix(const std::string& msg) : error(msg) {}
};

// Swanson mapping at omega - alpha - beta = 0.
struct free_particle_limit : error {
  explicit free_particle_limit(const std::string& msg) : error(msg) {}
};

// Bargmann coefficient cutoff beyond what the grid can resolve.
struct unresolved_truncation : error {
  explicit unresolved_truncation(const std::string& msg) : error(msg) {}
};

// Configuration / serialization problems.
struct config_error : error {
  explicit config_error(const std::string& msg) : error(msg) {}
};

struct io_error : error {
  explicit io_error(const std::string& msg) : error(msg) {}
};

}  // namespace ptqm

#endif
