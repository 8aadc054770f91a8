#ifndef RADIALEP_POTENTIAL_HPP
#define RADIALEP_POTENTIAL_HPP

namespace radialep {

/// Dimension and per-characteristic mass defining the Newtonian repulsion
/// N(r) and the confined well m*N(r) + r^2/2.
struct PotentialSpec {
    int d;
    double m = 1.0;

    PotentialSpec(int dim, double mass = 1.0);
};

/// |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2)
double surface_area(int d);

/// c_d = 1 / |S^{d-1}|
double newton_coeff(int d);

/// The positive constant c with dN/dr = -c r^{1-d}: c_d (d-2) for d >= 3,
/// 1/(2 pi) for d = 2.
double force_coeff(int d);

/// N(r): -(1/2pi) ln r in 2-D, c_d r^{2-d} for d >= 3.  r > 0 required.
double newtonian(double r, const PotentialSpec& spec);
double newtonian_d1(double r, const PotentialSpec& spec);
double newtonian_d2(double r, const PotentialSpec& spec);

/// Radius of the unique minimum of m N(r) + r^2/2: (m c)^{1/d}.
double equilibrium_radius(const PotentialSpec& spec);

/// Minimum value of the confined well.
double e_min(const PotentialSpec& spec);

/// Limiting period of small oscillations about the well minimum, 2 pi/sqrt(d)
/// for every mass.
double tau_d(int d);

/// Energy E_hat with T(E; m) = T(E_hat; 1): m^{-2/d} E for d >= 3,
/// E/m + (1/4pi) ln m for d = 2.  Requires E >= e_min(spec).
double normalize_energy(double E, const PotentialSpec& spec);

/// One-dimensional confining well with a single interior minimum, the
/// abstraction the period machinery works on.
class PotentialCurve {
public:
    virtual ~PotentialCurve() = default;
    virtual double value(double x) const = 0;
    virtual double deriv(double x) const = 0;
    virtual double deriv2(double x) const = 0;
    virtual double argmin() const = 0;
    virtual double min_value() const = 0;

    /// value(x) - min_value(): the well measured from its floor.
    double shifted(double x) const { return value(x) - min_value(); }
};

/// V_eff(r) = m N(r) + r^2/2 on (0, inf).
class EffectivePotential final : public PotentialCurve {
public:
    explicit EffectivePotential(PotentialSpec spec);

    double value(double r) const override;
    double deriv(double r) const override;
    double deriv2(double r) const override;
    double argmin() const override { return r_star_; }
    double min_value() const override { return e_min_; }

    const PotentialSpec& spec() const { return spec_; }

private:
    PotentialSpec spec_;
    double c_;  // force coefficient
    double r_star_;
    double e_min_;
};

/// The mass-free normal form V_d(x) = (x^{2-d} - 1)/(d-2) + (x^2 - 1)/2
/// (first term -ln x in 2-D), with minimum 0 at x = 1 and V_d''(1) = d.
class NormalizedPotential final : public PotentialCurve {
public:
    explicit NormalizedPotential(int d);

    double value(double x) const override;
    double deriv(double x) const override;
    double deriv2(double x) const override;
    double argmin() const override { return 1.0; }
    double min_value() const override { return 0.0; }

    int dim() const { return d_; }

private:
    int d_;
};

}  // namespace radialep

#endif
