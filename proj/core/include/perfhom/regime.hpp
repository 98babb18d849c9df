// Parameter algebra for the perforated Robin problem: the dimensionless
// quantities P_eps (boundary coupling strength) and Q_eps (capacity density),
// their exact limits, the limit regime classification, and all convergence
// rate functions used by the sweep harness.
#ifndef PERFHOM_REGIME_HPP
#define PERFHOM_REGIME_HPP

#include <optional>
#include <string>
#include <vector>

namespace perfhom::regime {

// Power-log law  c * eps^exponent * |ln eps|^log_power  on eps in (0,1).
// Describes the hole radius d_eps and the Robin coefficient gamma_eps.
struct ScalingLaw {
    double coefficient = 1.0;
    double exponent = 0.0;
    int log_power = 0;

    double operator()(double eps) const;
};

// Complete problem family: dimension plus the two scaling laws.
// gamma_law.coefficient == 0 encodes Neumann holes (gamma_eps = 0).
struct PerforationParams {
    int n = 3;
    ScalingLaw d_law;      // hole radius d_eps, coefficient > 0
    ScalingLaw gamma_law;  // Robin coefficient gamma_eps, coefficient >= 0

    // Throws std::invalid_argument unless n >= 2, d coefficient > 0,
    // gamma coefficient >= 0, and d_eps/eps -> 0 (exponent > 1, or == 1
    // with a negative log power).
    void validate() const;
};

// kappa_n = 2 pi^{n/2} / Gamma(n/2), surface area of the unit sphere.
double sphere_area(int n);

// The five quantities of a fixed (params, eps) pair.
struct PerforationNumbers {
    double P_eps = 0.0;
    double Q_eps = 0.0;
    double V_eps = 0.0;      // P Q / (P + Q), zero when P == 0
    double D_script = 0.0;   // d^{n-2} for n >= 3, 1/|ln d| for n = 2
    double Lambda_eps = 0.0; // d_eps / eps
    double d_eps = 0.0;
    double gamma_eps = 0.0;
};

PerforationNumbers perforation_numbers(const PerforationParams& params, double eps);

// Extended nonnegative real: the limit of a power-log law at eps -> 0.
struct Limit {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Zero;
    double value = 0.0; // positive for Finite, 0 for Zero, unused for Infinite

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_finite_positive() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    // finite numeric value; Zero -> 0, Infinite -> throws
    double finite_value() const;
};

enum class Scenario { VanishingLimit, HomogenizedLimit };

enum class VCase { P_pos_Q_inf, P_inf_Q_pos, both_pos, either_zero, not_applicable };

struct RegimeReport {
    Limit P;
    Limit Q;
    std::optional<double> V; // absent exactly when P = Q = infinity
    Scenario scenario = Scenario::HomogenizedLimit;
    VCase v_case = VCase::either_zero;
};

// Classifies the limits of P_eps, Q_eps by the lexicographic sign of
// (exponent, log_power); no numerical limiting is involved.
RegimeReport limit_regime(const PerforationParams& params);

enum class ValidityViolation {
    LambdaTooLarge,   // d_eps/eps > 1/4
    LogRatioTooLarge, // n = 2, Q > 0, |ln eps|/|ln d_eps| > 1/2
    HoleTooLarge,     // d_eps >= eps/2
};

std::string to_string(ValidityViolation v);

// Pointwise admissibility of eps: returns the violated conditions
// (empty means admissible). eps outside (0,1) throws std::domain_error.
std::vector<ValidityViolation> validate_epsilon(const PerforationParams& params, double eps);

// All rate functions at a fixed eps. Entries are absent when the regime
// does not define them: everything except th5_bound is absent in the
// vanishing regime P = Q = infinity, and eta_dprime additionally requires
// P < infinity.
struct RateBundle {
    std::optional<double> eta;        // L2 -> L2 rate
    std::optional<double> eta_prime;  // L2 -> H1 rate, max{V Q^{-1/2}; eta}
    std::optional<double> eta_tilde;  // corrector-augmented H1 rate
    std::optional<double> eta_dprime; // sharper H1 rate for P finite
    std::optional<double> delta_1;
    std::optional<double> delta_2;
    std::optional<double> delta_3;
    std::optional<double> delta_4;
    double th5_bound = 0.0; // max{1/P_eps; 1/Q_eps; eps^2}
};

// V_limit is the exact limit potential V; required whenever P < infinity or
// Q < infinity (throws std::invalid_argument when absent in that case).
RateBundle convergence_rates(const PerforationParams& params, double eps,
                             std::optional<double> V_limit);

// The five regions of the (s,t) phase diagram for d = eps^s, gamma = eps^t.
enum class Fig2Region {
    VanishingBoth, // P = inf and Q = inf
    SomeZero,      // P = 0 or Q = 0
    PposQinf,      // P finite positive, Q = inf
    PinfQpos,      // P = inf, Q finite positive
    BothPos,       // both finite positive
};

std::string to_string(Fig2Region r);

// Classification by the exponent signs of P_eps and Q_eps; n >= 3, s > 1.
Fig2Region figure2_region(int n, double s, double t);

} // namespace perfhom::regime

#endif
