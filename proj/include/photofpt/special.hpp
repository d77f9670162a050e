#pragma once

// Normal-distribution helpers that stay finite far into the tails.

namespace photofpt::special {

/// log Phi(z), Phi the standard normal CDF. Accurate for z down to -1e150.
double log_ndtr(double z);

/// log(Phi(hi) - Phi(lo)) for hi > lo. Returns -inf when hi <= lo.
double log_ndtr_diff(double hi, double lo);

/// tanh(x)/x with its removable singularity at 0.
double tanhc(double x);

}  // namespace photofpt::special
