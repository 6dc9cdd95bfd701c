// Generalized Hölder moduli of continuity
//
//     omega(r) = r^alpha / (log(r0/r))^beta        on (0, 1],
//
// extended linearly beyond diam_clip and with omega(0) = 0. The calibration
// constant r0 is chosen so that omega is increasing and concave on [0,1];
// when alpha > 0 there is a ratio theta < 1 with omega(r/2) <= theta*omega(r).
#pragma once

#include <stdexcept>
#include <string>

#include "rpflab/grid_function.hpp"

namespace rpflab::moduli {

struct ModulusSpec {
    double alpha = 1.0;      // power exponent, in [0,1]
    double beta = 0.0;       // log correction exponent; beta > 0 required when alpha = 0
    double r0 = 2.718281828459045;  // calibration constant, a power of e
    double diam_clip = 1.0;  // linear extension beyond this point

    bool admissible() const {
        return alpha >= 0.0 && alpha <= 1.0 && (alpha > 0.0 || beta > 0.0);
    }
};

// omega(r); total on r >= 0.
double eval_modulus(const ModulusSpec& spec, double r);

// Smallest r0 = e^m (m = 1, 2, ...) passing the monotonicity/concavity scan
// on a 10^4-point grid of [0,1] (and theta < 1 when alpha > 0, beta < 0).
// Throws std::invalid_argument for inadmissible (alpha, beta).
ModulusSpec choose_r0(double alpha, double beta);

// theta with omega(r/2) <= theta*omega(r) on (0,1]. Requires alpha > 0.
double half_ratio(const ModulusSpec& spec);

// Exact Hol_omega of the interpolant restricted to grid nodes: the max over
// node pairs of |f(x)-f(y)| / omega(d(x,y)). A lower bound for the continuum
// constant of the interpolant.
double holder_constant(const GridFunction& f, const ModulusSpec& spec);

}  // namespace rpflab::moduli
