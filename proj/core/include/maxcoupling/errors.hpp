#pragma once

#include <stdexcept>
#include <string>

namespace maxcoupling {

/// Error taxonomy shared by all modules. The CLI maps these onto exit codes,
/// so library code must throw Error (not raw std exceptions) for anything a
/// caller can trigger through inputs.
enum class Errc {
  empty_measure,
  non_finite,
  bad_mass,
  bad_interval,
  non_convex_quotes,
  too_few_quotes,
  above_support,
  out_of_range,
  not_centered,
  bad_grid,
  not_unimodal,
  missing_derivative,
  support_too_large,
  not_crossed,
  insufficient_mass,
  bad_geometry,
  grid_too_coarse,
  iteration_limit,
  off_lattice,
  no_stopped_samples,
  grid_mismatch,
  ridge_unavailable,
  no_such_atom,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace maxcoupling
