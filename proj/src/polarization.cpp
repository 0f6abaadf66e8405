#include "bellcheck/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bellcheck/errors.hpp"

namespace bellcheck {

Angle::Angle(double radians) : radians_(radians) {
    if (!std::isfinite(radians)) throw ValidationError("angle must be finite");
}

Angle Angle::from_degrees(double degrees) { return Angle(degrees * (std::numbers::pi / 180.0)); }

double Angle::degrees() const { return radians_ * (180.0 / std::numbers::pi); }

Angle Angle::reduced() const {
    double r = std::fmod(radians_, std::numbers::pi);
    if (r < 0.0) r += std::numbers::pi;
    if (r >= std::numbers::pi) r = 0.0;
    return Angle(r);
}

Angle operator+(Angle a, Angle b) { return Angle(a.radians() + b.radians()); }
Angle operator-(Angle a, Angle b) { return Angle(a.radians() - b.radians()); }

bool same_setting(Angle a, Angle b, double tol) {
    const double d = std::abs(a.reduced().radians() - b.reduced().radians());
    return std::min(d, std::numbers::pi - d) <= tol;
}

AngleConfig::AngleConfig(Angle alpha1, Angle alpha2, Angle beta1, Angle beta2)
    : alpha1_(alpha1), alpha2_(alpha2), beta1_(beta1), beta2_(beta2) {
    if (same_setting(alpha1, alpha2)) throw ValidationError("alpha1 and alpha2 must differ (mod 180 deg)");
    if (same_setting(beta1, beta2)) throw ValidationError("beta1 and beta2 must differ (mod 180 deg)");
}

AngleConfig AngleConfig::from_degrees(double alpha1, double alpha2, double beta1, double beta2) {
    return AngleConfig(Angle::from_degrees(alpha1), Angle::from_degrees(alpha2), Angle::from_degrees(beta1),
                       Angle::from_degrees(beta2));
}

ComplexVector singlet_state() {
    const double h = 1.0 / std::numbers::sqrt2;
    return ComplexVector{0.0, h, -h, 0.0};
}

RotatedBasis rotated_basis(Angle phi) {
    const double c = std::cos(phi.radians());
    const double s = std::sin(phi.radians());
    return {ComplexVector{c, s}, ComplexVector{-s, c}};
}

ComplexVector port_state(Angle phi, int outcome_index) {
    if (outcome_index != 0 && outcome_index != 1) throw ValidationError("outcome index must be 0 or 1");
    auto basis = rotated_basis(phi);
    return outcome_index == 0 ? basis.plus : basis.minus;
}

ComplexMatrix pauli_y() {
    const Complex i{0.0, 1.0};
    return ComplexMatrix{{0.0, -i}, {i, 0.0}};
}

ComplexMatrix pauli_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix z_operator(Angle phi) {
    const auto basis = rotated_basis(phi);
    return outer(basis.plus, basis.plus) - outer(basis.minus, basis.minus);
}

ComplexMatrix x_operator(Angle alpha) { return kron(z_operator(alpha), ComplexMatrix::identity(2)); }

ComplexMatrix y_operator(Angle beta) { return kron(ComplexMatrix::identity(2), z_operator(beta)); }

}  // namespace bellcheck
