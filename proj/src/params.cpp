#include "trisync/params.hpp"

#include <cmath>
#include <string>

namespace trisync {

double CouplingParams::validated(double a) {
    if (a == 0.0)
        throw DegenerateCoupling("coupling gain a = 0 degenerates the return map to the identity");
    if (!(a > 0.0) || !(a < max_coupling))
        throw CouplingOutOfRange("coupling gain a = " + std::to_string(a) +
                                 " outside the diffeomorphism range 0 < a < 1/6");
    return a;
}

CouplingParams CouplingParams::from_physical(double alpha, double mu, double h) {
    if (!std::isfinite(alpha) || !std::isfinite(mu) || !std::isfinite(h) || h == 0.0)
        throw CouplingOutOfRange("physical parameters must be finite with h != 0");
    CouplingParams params(alpha * mu / (8.0 * h * h));
    params.physical_ = Physical{alpha, mu, h};
    return params;
}

}  // namespace trisync
