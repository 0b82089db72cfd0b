#pragma once

#include <optional>

#include "trisync/errors.hpp"

namespace trisync {

// Dimensionless coupling gain of the pulse-coupled chain. All map operations
// take their strength from here; the validity window 0 < a < 1/6 is what keeps
// the one-cycle return map an orientation-preserving diffeomorphism, so it is
// enforced at construction and nowhere else.
class CouplingParams {
  public:
    struct Physical {
        double alpha;  // pulse amplitude
        double mu;     // response slope at threshold
        double h;      // threshold height
    };

    explicit CouplingParams(double a) : a_(validated(a)) {}

    // a = alpha * mu / (8 h^2)
    static CouplingParams from_physical(double alpha, double mu, double h);

    double a() const noexcept { return a_; }
    const std::optional<Physical>& physical() const noexcept { return physical_; }

    static constexpr double max_coupling = 1.0 / 6.0;  // exclusive upper bound

  private:
    static double validated(double a);

    double a_;
    std::optional<Physical> physical_;
};

}  // namespace trisync
