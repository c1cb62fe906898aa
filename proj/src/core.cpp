#include "jacobi_cs/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jacobi_cs {

DiskPoint DiskPoint::make(Complex w, double guard) {
    if (!is_finite(w)) throw NonFinite("disk coordinate w is not finite");
    if (!(guard > 0 && guard < 1)) throw InvalidParams("disk guard must lie in (0, 1)");
    const double r = std::abs(w);
    if (r >= 1.0 - guard) {
        std::ostringstream os;
        os << "|w| = " << r << " violates the disk bound |w| < 1 - " << guard;
        throw BoundaryViolation(os.str());
    }
    // 1 - |w|^2 computed as (1 - r)(1 + r) keeps precision near the rim.
    return DiskPoint(w, (1.0 - r) * (1.0 + r));
}

JacobiPoint::JacobiPoint(Complex z, DiskPoint w) : z_(z), w_(w) {
    if (!is_finite(z)) throw NonFinite("coordinate z is not finite");
}

JacobiPoint make_jacobi_point(Complex z, Complex w, double guard) {
    return JacobiPoint(z, DiskPoint::make(w, guard));
}

Complex eta_of(const JacobiPoint& zeta) {
    return (zeta.z() + std::conj(zeta.z()) * zeta.w()) / zeta.p();
}

ModelParams ModelParams::make(double k, double mu) {
    if (!std::isfinite(k) || !std::isfinite(mu)) throw NonFinite("model parameters must be finite");
    if (!(k > 0)) throw InvalidParams("Bargmann index k must be positive");
    if (!(mu > 0)) throw InvalidParams("Heisenberg scale mu must be positive");
    return ModelParams(k, mu);
}

bool ModelParams::has_quarter_basis() const {
    const double twice = 2.0 * shifted_index();
    const double rounded = std::round(twice);
    return rounded >= 1.0 && std::abs(twice - rounded) < 1e-12;
}

void ModelParams::require_quarter_basis() const {
    if (!has_quarter_basis()) {
        std::ostringstream os;
        os << "k = " << k_ << " is not of the form k' + 1/4 with 2k' a positive integer";
        throw InvalidK(os.str());
    }
}

void ModelParams::require_normalizable() const {
    if (!(k_ > 0.75)) {
        std::ostringstream os;
        os << "k = " << k_ << " must exceed 3/4 for a normalizable weight";
        throw InvalidK(os.str());
    }
}

double HermitianMetric2::scale() const {
    return std::max({std::abs(h_zz), std::abs(h_zw), std::abs(h_ww)});
}

double max_abs_diff(const HermitianMetric2& a, const HermitianMetric2& b) {
    return std::max({std::abs(a.h_zz - b.h_zz), std::abs(a.h_zw - b.h_zw), std::abs(a.h_ww - b.h_ww)});
}

}  // namespace jacobi_cs
