#include "perfhom/regime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace perfhom::regime {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_unit_interval(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("eps must lie in (0,1), got " + std::to_string(eps));
}

// Limit of c * eps^a * |ln eps|^p as eps -> 0+, classified by the
// lexicographic sign of (a, p). c > 0 assumed; c == 0 gives the zero law.
Limit power_log_limit(const ScalingLaw& law) {
    if (law.coefficient == 0.0) return {Limit::Kind::Zero, 0.0};
    if (law.exponent > 0.0) return {Limit::Kind::Zero, 0.0};
    if (law.exponent < 0.0) return {Limit::Kind::Infinite, 0.0};
    if (law.log_power > 0) return {Limit::Kind::Infinite, 0.0};
    if (law.log_power < 0) return {Limit::Kind::Zero, 0.0};
    return {Limit::Kind::Finite, law.coefficient};
}

} // namespace

double ScalingLaw::operator()(double eps) const {
    require_unit_interval(eps);
    if (coefficient == 0.0) return 0.0;
    double v = coefficient * std::pow(eps, exponent);
    if (log_power != 0) v *= std::pow(-std::log(eps), log_power);
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error("scaling law does not evaluate to a finite positive value");
    return v;
}

void PerforationParams::validate() const {
    if (n < 2) throw std::invalid_argument("dimension must satisfy n >= 2");
    if (!(d_law.coefficient > 0.0))
        throw std::invalid_argument("d_law coefficient must be positive");
    if (gamma_law.coefficient < 0.0)
        throw std::invalid_argument("gamma_law coefficient must be nonnegative");
    const bool lambda_decays =
        d_law.exponent > 1.0 || (d_law.exponent == 1.0 && d_law.log_power < 0);
    if (!lambda_decays)
        throw std::invalid_argument("d_eps/eps must decay: need d exponent > 1, "
                                    "or == 1 with negative log power");
}

double sphere_area(int n) {
    if (n < 2) throw std::domain_error("sphere_area requires n >= 2");
    return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

double Limit::finite_value() const {
    if (is_infinite()) throw std::logic_error("limit is infinite");
    return is_finite_positive() ? value : 0.0;
}

PerforationNumbers perforation_numbers(const PerforationParams& params, double eps) {
    params.validate();
    require_unit_interval(eps);
    const double d = params.d_law(eps);
    const double gamma = params.gamma_law(eps);
    if (d >= 0.5 * eps)
        throw std::domain_error("hole radius d_eps must be < eps/2");

    const int n = params.n;
    const double kappa = sphere_area(n);
    PerforationNumbers out;
    out.d_eps = d;
    out.gamma_eps = gamma;
    out.Lambda_eps = d / eps;
    out.P_eps = kappa * gamma * std::pow(d, n - 1) / std::pow(eps, n);
    if (n >= 3) {
        out.Q_eps = (n - 2) * kappa * std::pow(d, n - 2) / std::pow(eps, n);
        out.D_script = std::pow(d, n - 2);
    } else {
        out.Q_eps = 2.0 * kPi / (std::abs(std::log(d)) * eps * eps);
        out.D_script = 1.0 / std::abs(std::log(d));
    }
    out.V_eps = out.P_eps > 0.0 ? out.P_eps * out.Q_eps / (out.P_eps + out.Q_eps) : 0.0;
    return out;
}

RegimeReport limit_regime(const PerforationParams& params) {
    params.validate();
    const int n = params.n;
    const double kappa = sphere_area(n);
    const double s = params.d_law.exponent;
    const int ps = params.d_law.log_power;

    ScalingLaw p_law;
    p_law.coefficient = kappa * params.gamma_law.coefficient *
                        std::pow(params.d_law.coefficient, n - 1);
    p_law.exponent = params.gamma_law.exponent + (n - 1) * s - n;
    p_law.log_power = params.gamma_law.log_power + (n - 1) * ps;

    Limit P = power_log_limit(p_law);
    Limit Q;
    if (n >= 3) {
        ScalingLaw q_law;
        q_law.coefficient = (n - 2) * kappa * std::pow(params.d_law.coefficient, n - 2);
        q_law.exponent = (n - 2) * s - n;
        q_law.log_power = (n - 2) * ps;
        Q = power_log_limit(q_law);
    } else {
        // n = 2: Q_eps = 2 pi / (|ln d_eps| eps^2) with |ln d_eps| ~ s |ln eps|,
        // so eps^2 |ln d_eps| -> 0 for every admissible power-log d-law.
        Q = {Limit::Kind::Infinite, 0.0};
    }

    RegimeReport rep;
    rep.P = P;
    rep.Q = Q;
    if (P.is_infinite() && Q.is_infinite()) {
        rep.scenario = Scenario::VanishingLimit;
        rep.v_case = VCase::not_applicable;
        rep.V = std::nullopt;
        return rep;
    }
    rep.scenario = Scenario::HomogenizedLimit;
    if (P.is_zero() || Q.is_zero()) {
        rep.v_case = VCase::either_zero;
        rep.V = 0.0;
    } else if (P.is_finite_positive() && Q.is_infinite()) {
        rep.v_case = VCase::P_pos_Q_inf;
        rep.V = P.value;
    } else if (P.is_infinite() && Q.is_finite_positive()) {
        rep.v_case = VCase::P_inf_Q_pos;
        rep.V = Q.value;
    } else {
        rep.v_case = VCase::both_pos;
        rep.V = P.value * Q.value / (P.value + Q.value);
    }
    return rep;
}

std::string to_string(ValidityViolation v) {
    switch (v) {
        case ValidityViolation::LambdaTooLarge: return "Lambda_eps > 1/4";
        case ValidityViolation::LogRatioTooLarge: return "|ln eps|/|ln d_eps| > 1/2";
        case ValidityViolation::HoleTooLarge: return "d_eps >= eps/2";
    }
    return "?";
}

std::vector<ValidityViolation> validate_epsilon(const PerforationParams& params, double eps) {
    params.validate();
    require_unit_interval(eps);
    const double d = params.d_law(eps);
    std::vector<ValidityViolation> out;
    if (d >= 0.5 * eps) out.push_back(ValidityViolation::HoleTooLarge);
    if (d / eps > 0.25) out.push_back(ValidityViolation::LambdaTooLarge);
    if (params.n == 2 && !limit_regime(params).Q.is_zero()) {
        if (std::abs(std::log(eps)) / std::abs(std::log(d)) > 0.5)
            out.push_back(ValidityViolation::LogRatioTooLarge);
    }
    return out;
}

RateBundle convergence_rates(const PerforationParams& params, double eps,
                             std::optional<double> V_limit) {
    const PerforationNumbers num = perforation_numbers(params, eps);
    const RegimeReport rep = limit_regime(params);
    const int n = params.n;
    const double lam = num.Lambda_eps;

    RateBundle out;
    out.th5_bound = std::max({num.P_eps > 0.0 ? 1.0 / num.P_eps
                                              : std::numeric_limits<double>::infinity(),
                              1.0 / num.Q_eps, eps * eps});
    if (rep.scenario == Scenario::VanishingLimit) return out;

    if (!V_limit)
        throw std::invalid_argument("V_limit is required when P < infinity or Q < infinity");
    const double vdiff = std::abs(num.V_eps - *V_limit);
    const double abs_ln_eps = std::abs(std::log(eps));
    const double abs_ln_lam = std::abs(std::log(lam));

    double eta;
    if (n >= 5) eta = std::max({vdiff, eps, lam});
    else if (n == 4) eta = std::max({vdiff, eps, lam * abs_ln_lam});
    else if (n == 3) eta = std::max({vdiff, eps, std::sqrt(lam)});
    else eta = std::max({vdiff, eps * abs_ln_eps, 1.0 / std::sqrt(abs_ln_lam)});
    out.eta = eta;
    out.eta_prime = std::max(num.V_eps / std::sqrt(num.Q_eps), eta);

    if (n >= 5) out.eta_tilde = std::max(vdiff, std::pow(eps, 2.0 / (n - 2)));
    else if (n == 3) out.eta_tilde = std::max(vdiff, eps);
    else out.eta_tilde = std::max(vdiff, eps * abs_ln_eps); // n = 4 and n = 2

    if (!rep.P.is_infinite()) {
        const double pdiff = std::abs(num.P_eps - rep.P.finite_value());
        out.eta_dprime = std::max({num.P_eps / std::sqrt(num.Q_eps), pdiff, eps,
                                   std::pow(lam, 0.5 * n)});
    }

    out.delta_1 = std::max(std::pow(lam, 0.5 * n), std::sqrt(eps * num.d_eps));
    out.delta_2 = n >= 3 ? *out.delta_1
                         : std::max(std::sqrt(lam),
                                    std::pow(eps, 0.75) * std::pow(num.d_eps, 0.25));
    if (n >= 5) out.delta_3 = lam;
    else if (n == 4) out.delta_3 = lam * abs_ln_lam;
    else if (n == 3) out.delta_3 = std::sqrt(lam);
    else out.delta_3 = 1.0 / std::sqrt(abs_ln_lam);
    out.delta_4 = n >= 3 ? eps : eps * abs_ln_eps;
    return out;
}

std::string to_string(Fig2Region r) {
    switch (r) {
        case Fig2Region::VanishingBoth: return "P=inf and Q=inf";
        case Fig2Region::SomeZero: return "P=0 or Q=0";
        case Fig2Region::PposQinf: return "P>0 and Q=inf";
        case Fig2Region::PinfQpos: return "P=inf and Q>0";
        case Fig2Region::BothPos: return "P>0 and Q>0";
    }
    return "?";
}

Fig2Region figure2_region(int n, double s, double t) {
    if (n < 3) throw std::domain_error("figure2_region requires n >= 3");
    if (!(s > 1.0)) throw std::domain_error("figure2_region requires s > 1");
    const double p_exp = t + (n - 1) * s - n; // P_eps = kappa_n eps^{p_exp}
    const double q_exp = (n - 2) * s - n;     // Q_eps = (n-2) kappa_n eps^{q_exp}
    const bool p_inf = p_exp < 0.0, p_zero = p_exp > 0.0;
    const bool q_inf = q_exp < 0.0, q_zero = q_exp > 0.0;
    if (p_inf && q_inf) return Fig2Region::VanishingBoth;
    if (p_zero || q_zero) return Fig2Region::SomeZero;
    if (!p_inf && q_inf) return Fig2Region::PposQinf;
    if (p_inf && !q_inf) return Fig2Region::PinfQpos;
    return Fig2Region::BothPos;
}

} // namespace perfhom::regime
