#include "photofpt/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace photofpt {

namespace {

void check(bool ok, const std::string& message) {
    if (!ok) throw InvalidParameter(message);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

DimensionlessIntensity::DimensionlessIntensity(double x) : x_(x) {
    check(std::isfinite(x) && x >= 0.0, "dimensionless intensity must be finite and >= 0");
}

void DetectorParams::validate() const {
    check(finite_positive(e_m), "e_m must be finite and > 0");
    check(finite_positive(sigma), "sigma must be finite and > 0");
    check(std::isfinite(i_s) && i_s >= 0.0, "i_s must be finite and >= 0");
    check(finite_positive(cross_section), "cross_section must be finite and > 0");
}

DimensionlessIntensity DetectorParams::x() const {
    return DimensionlessIntensity(i_s * e_m / (sigma * sigma));
}

DetectorParams DetectorParams::from_x(DimensionlessIntensity x, double e_m, double sigma,
                                      double cross_section) {
    DetectorParams p{e_m, sigma, x.value() * sigma * sigma / e_m, cross_section};
    p.validate();
    return p;
}

void SeriesControl::validate() const {
    check(n_images >= 1, "n_images must be >= 1");
    check(kl_max >= 1, "kl_max must be >= 1");
    check(finite_positive(abs_tol), "abs_tol must be > 0");
    check(finite_positive(rel_tol), "rel_tol must be > 0");
}

bool SeriesControl::accepts(double value, double tail) const {
    return std::isfinite(tail) && std::abs(tail) <= std::max(abs_tol, rel_tol * std::abs(value));
}

double SeriesValue::require(const char* what) const {
    if (!converged) {
        throw TruncationError(std::string(what) + ": truncation tail " + std::to_string(tail) +
                              " exceeds tolerance");
    }
    return value;
}

void QuantumDetectorParams::validate() const {
    check(std::isfinite(eta) && eta > 0.0 && eta <= 1.0, "eta must lie in (0, 1]");
    check(finite_positive(k_const), "k_const must be finite and > 0");
    check(std::isfinite(equivalent_threshold()), "1/(k_const*eta) must be finite");
}

}  // namespace photofpt
