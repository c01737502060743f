#include "spirallike/quadrature.hpp"

#include <cmath>

namespace spirallike {

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !std::isfinite(cfg.rel_tol)) {
        throw std::invalid_argument("quadrature rel_tol must be positive");
    }
    if (!(cfg.grading_exponent >= 1.0) || !std::isfinite(cfg.grading_exponent)) {
        throw std::invalid_argument("quadrature grading exponent must be >= 1");
    }
    if (cfg.max_panels == 0) {
        throw std::invalid_argument("quadrature needs at least one panel");
    }
}

}  // namespace spirallike
