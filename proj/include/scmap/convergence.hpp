#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace scmap {

/// Outcome of an iterative refinement: the converged value together with the
/// absolute difference between the last two refinement levels.
struct ConvergenceReport {
    double value = 0.0;
    double estimated_error = 0.0;
    int refinement_steps = 0;
};

/// Thrown when an iterative scheme exhausts its refinement budget. Carries the
/// best estimate reached so callers can still inspect it.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, double best_estimate, int refinement_steps)
        : std::runtime_error(what), best_estimate_(best_estimate), refinement_steps_(refinement_steps)
    {
    }

    double best_estimate() const noexcept
    {
        return best_estimate_;
    }
    int refinement_steps() const noexcept
    {
        return refinement_steps_;
    }

  private:
    double best_estimate_;
    int refinement_steps_;
};

/// Thrown when the 2-d root finder gives up. Carries the last iterate.
class root_find_error : public std::runtime_error {
  public:
    root_find_error(const std::string& what, std::array<double, 2> last_iterate, int iterations)
        : std::runtime_error(what), last_iterate_(last_iterate), iterations_(iterations)
    {
    }

    std::array<double, 2> last_iterate() const noexcept
    {
        return last_iterate_;
    }
    int iterations() const noexcept
    {
        return iterations_;
    }

  private:
    std::array<double, 2> last_iterate_;
    int iterations_;
};

} // namespace scmap
