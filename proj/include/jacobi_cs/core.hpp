#pragma once

// Domain types shared by every module: points of the Siegel-Jacobi disk
// C x D_1, the representation parameters (k, mu), tangent vectors and the
// 2x2 Hermitian metric block.

#include <complex>
#include <stdexcept>
#include <string>

namespace jacobi_cs {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Default guard: points with |w| >= 1 - kDefaultBoundGuard are rejected.
inline constexpr double kDefaultBoundGuard = 1e-9;

// ---------------------------------------------------------------------------
// Errors. Every failure raised by the library derives from DomainError so the
// CLI can map it onto an exit code.

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BoundaryViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class NonFinite : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidParams : public DomainError {
public:
    using DomainError::DomainError;
};

/// Raised when an operation needs the quarter-shifted family k = k' + 1/4,
/// 2k' a positive integer (or k > 3/4 for the weighted measure).
class InvalidK : public DomainError {
public:
    using DomainError::DomainError;
};

class BoundaryProximity : public DomainError {
public:
    using DomainError::DomainError;
};

class BoundaryEscape : public DomainError {
public:
    BoundaryEscape(const std::string& what, double t) : DomainError(what), t_(t) {}
    /// Last time at which the trajectory was still inside the guarded disk.
    double t() const { return t_; }

private:
    double t_;
};

class ZeroDirection : public DomainError {
public:
    using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class EndpointMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

// ---------------------------------------------------------------------------

inline bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

/// A point of the open unit disk, kept at least `guard` away from |w| = 1.
class DiskPoint {
public:
    static DiskPoint make(Complex w, double guard = kDefaultBoundGuard);

    Complex value() const { return w_; }
    /// P = 1 - |w|^2, strictly positive.
    double p() const { return p_; }

private:
    DiskPoint(Complex w, double p) : w_(w), p_(p) {}
    Complex w_;
    double p_;
};

/// zeta = (z, w) in C x D_1.
class JacobiPoint {
public:
    JacobiPoint(Complex z, DiskPoint w);

    Complex z() const { return z_; }
    Complex w() const { return w_.value(); }
    const DiskPoint& disk() const { return w_; }
    double p() const { return w_.p(); }

private:
    Complex z_;
    DiskPoint w_;
};

JacobiPoint make_jacobi_point(Complex z, Complex w, double guard = kDefaultBoundGuard);

/// eta = (z + conj(z) w) / (1 - |w|^2).
Complex eta_of(const JacobiPoint& zeta);

/// Representation parameters: Bargmann index k and Heisenberg scale mu.
class ModelParams {
public:
    /// Requires k > 0 and mu > 0. Operations that need more (the weighted
    /// measure needs k > 3/4, the orthonormal basis needs the quarter shift)
    /// check it themselves.
    static ModelParams make(double k, double mu);

    double k() const { return k_; }
    double mu() const { return mu_; }

    /// k' = k - 1/4.
    double shifted_index() const { return k_ - 0.25; }
    /// True when 2(k - 1/4) is a positive integer.
    bool has_quarter_basis() const;
    /// Throws InvalidK unless has_quarter_basis().
    void require_quarter_basis() const;
    /// Throws InvalidK unless k > 3/4 (Lambda = (4k - 3)/(2 pi^2) > 0).
    void require_normalizable() const;

private:
    ModelParams(double k, double mu) : k_(k), mu_(mu) {}
    double k_;
    double mu_;
};

struct TangentVector {
    Complex dz{};
    Complex dw{};
};

inline TangentVector operator+(TangentVector a, TangentVector b) { return {a.dz + b.dz, a.dw + b.dw}; }
inline TangentVector operator-(TangentVector a, TangentVector b) { return {a.dz - b.dz, a.dw - b.dw}; }
inline TangentVector operator*(double s, TangentVector a) { return {s * a.dz, s * a.dw}; }

/// Hermitian block [[h_zz, h_zw], [conj(h_zw), h_ww]] where h_zw is the
/// coefficient h_{z wbar}.
struct HermitianMetric2 {
    double h_zz = 0;
    Complex h_zw{};
    double h_ww = 0;

    double det() const { return h_zz * h_ww - std::norm(h_zw); }
    bool is_positive_definite() const { return h_zz > 0 && h_ww > 0 && det() > 0; }
    /// Largest absolute entry.
    double scale() const;
};

/// Largest absolute difference between corresponding entries.
double max_abs_diff(const HermitianMetric2& a, const HermitianMetric2& b);

}  // namespace jacobi_cs
