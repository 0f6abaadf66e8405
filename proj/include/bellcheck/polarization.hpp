#pragma once

#include <utility>

#include "bellcheck/linalg.hpp"

namespace bellcheck {

/// A polarizer orientation. Stored in radians; settings are physically
/// periodic in pi.
class Angle {
  public:
    constexpr Angle() = default;
    explicit Angle(double radians);

    static Angle from_degrees(double degrees);

    double radians() const { return radians_; }
    double degrees() const;
    /// Representative in [0, pi).
    Angle reduced() const;

  private:
    double radians_ = 0.0;
};

Angle operator+(Angle a, Angle b);
Angle operator-(Angle a, Angle b);

/// True when the two settings coincide modulo pi within `tol` radians.
bool same_setting(Angle a, Angle b, double tol = 1e-12);

/// The four polarizer angles of a CHSH arrangement. Construction enforces
/// alpha1 != alpha2 and beta1 != beta2 modulo pi (ValidationError otherwise).
class AngleConfig {
  public:
    AngleConfig(Angle alpha1, Angle alpha2, Angle beta1, Angle beta2);
    static AngleConfig from_degrees(double alpha1, double alpha2, double beta1, double beta2);

    Angle alpha1() const { return alpha1_; }
    Angle alpha2() const { return alpha2_; }
    Angle beta1() const { return beta1_; }
    Angle beta2() const { return beta2_; }

  private:
    Angle alpha1_, alpha2_, beta1_, beta2_;
};

struct RotatedBasis {
    ComplexVector plus;   // port 1, eigenvalue +1
    ComplexVector minus;  // port 2, eigenvalue -1
};

/// (0, 1/sqrt2, -1/sqrt2, 0) in the Alice-major basis {e1e1, e1e2, e2e1, e2e2}.
ComplexVector singlet_state();

RotatedBasis rotated_basis(Angle phi);
/// Eigenvector of the polarizer at `phi` for outcome index 0 (+1) or 1 (-1).
ComplexVector port_state(Angle phi, int outcome_index);

ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Single-photon observable: +|z1><z1| - |z2><z2| in the rotated basis.
ComplexMatrix z_operator(Angle phi);
/// Z(alpha) acting on Alice's photon, identity on Bob's.
ComplexMatrix x_operator(Angle alpha);
/// Identity on Alice's photon, Z(beta) acting on Bob's.
ComplexMatrix y_operator(Angle beta);

}  // namespace bellcheck
