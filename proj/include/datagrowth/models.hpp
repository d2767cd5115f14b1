#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <string>
#include <variant>

#include "datagrowth/errors.hpp"
#include "datagrowth/units.hpp"

// The three parametric families. All free functions are pure; parameter
// records are plain values and safe to share.
//
//   exponential   V(t) = a * exp(b * (t - t0))
//   logistic      V(t) = a / (1 + b * exp(-c * (t - t0)))
//   demographic   N(t) = c_h / tau_h * arcctg((t0_h - t) / tau_h)
//
// arcctg is taken on the (0, pi) branch, the only one keeping N positive
// and increasing.

namespace datagrowth {

struct ExponentialParams {
  VolumeEB a = 1.0;    // scale at t0
  double b = 1.0;      // growth rate, 1/yr
  TimeYears t0 = units::kVolumeEpochYear;
};

struct LogisticParams {
  VolumeEB a = 1.0;    // saturation level
  double b = 1.0;      // offset, dimensionless
  double c = 1.0;      // growth rate, 1/yr
  TimeYears t0 = units::kVolumeEpochYear;
};

struct DemographicParams {
  double c_h = 186e9;        // person-years
  double tau_h = 42.0;       // years
  TimeYears t0_h = 2007.0;
};

inline void validate(const ExponentialParams& p) {
  if (!(p.a > 0.0 && p.b > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b)) {
    throw ValidationError("exponential params: require a > 0, b > 0");
  }
}

inline void validate(const LogisticParams& p) {
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b) ||
      !std::isfinite(p.c)) {
    throw ValidationError("logistic params: require a > 0, b > 0, c > 0");
  }
}

inline void validate(const DemographicParams& p) {
  if (!(p.c_h > 0.0 && p.tau_h > 0.0)) {
    throw ValidationError("demographic params: require c_h > 0, tau_h > 0");
  }
}

using VolumeModel = std::variant<ExponentialParams, LogisticParams>;

inline void validate(const VolumeModel& m) {
  std::visit([](const auto& p) { validate(p); }, m);
}

namespace detail {

// log(1 + exp(x)) without overflow or low-end precision loss.
inline double softplus(double x) {
  if (x > 36.0) return x + std::exp(-x);
  if (x < -36.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

// arcctg on (0, pi); exact branch via atan2, precise for |x| large.
inline double arccot(double x) { return std::atan2(1.0, x); }

}  // namespace detail

// --- exponential ---------------------------------------------------------

inline double eval(const ExponentialParams& p, TimeYears t) {
  return p.a * std::exp(p.b * (t - p.t0));
}

inline double deriv1(const ExponentialParams& p, TimeYears t) { return p.b * eval(p, t); }

inline double deriv2(const ExponentialParams& p, TimeYears t) { return p.b * p.b * eval(p, t); }

inline TimeYears inverse(const ExponentialParams& p, VolumeEB v) {
  if (!(v > 0.0)) {
    throw DomainError("exponential inverse: volume must be in (0, inf), got " + std::to_string(v));
  }
  return p.t0 + std::log(v / p.a) / p.b;
}

inline double antiderivative(const ExponentialParams& p, TimeYears t) {
  return p.a / p.b * std::exp(p.b * (t - p.t0));
}

// Antiderivative difference, paired so nearby endpoints do not cancel.
inline double integral(const ExponentialParams& p, TimeYears t1, TimeYears t2) {
  return p.a / p.b * std::exp(p.b * (t1 - p.t0)) * std::expm1(p.b * (t2 - t1));
}

inline std::optional<VolumeEB> asymptote(const ExponentialParams&) { return std::nullopt; }

// --- logistic -------------------------------------------------------------

inline double eval(const LogisticParams& p, TimeYears t) {
  return p.a / (1.0 + p.b * std::exp(-p.c * (t - p.t0)));
}

inline double deriv1(const LogisticParams& p, TimeYears t) {
  const double w = p.b * std::exp(-p.c * (t - p.t0));
  if (w > 1e150) return p.a * p.c / w;  // (1+w)^2 would overflow
  return p.a * p.c * w / ((1.0 + w) * (1.0 + w));
}

inline double deriv2(const LogisticParams& p, TimeYears t) {
  const double w = p.b * std::exp(-p.c * (t - p.t0));
  if (w > 1e100) return p.a * p.c * p.c / w;
  const double d = 1.0 + w;
  return p.a * p.c * p.c * w * (w - 1.0) / (d * d * d);
}

inline TimeYears inverse(const LogisticParams& p, VolumeEB v) {
  if (!(v > 0.0 && v < p.a)) {
    throw DomainError("logistic inverse: volume must be in (0, " + std::to_string(p.a) +
                      "), got " + std::to_string(v));
  }
  return p.t0 - std::log((p.a / v - 1.0) / p.b) / p.c;
}

inline double antiderivative(const LogisticParams& p, TimeYears t) {
  // (a/c) * log(exp(c*(t-t0)) + b), written through softplus so neither
  // tail overflows.
  const double x = p.c * (t - p.t0);
  return p.a / p.c * (std::log(p.b) + detail::softplus(x - std::log(p.b)));
}

// Antiderivative difference. The shared log(b) term cancels symbolically,
// which keeps differences meaningful far below t0 where both endpoint
// antiderivatives round to the same double.
inline double integral(const LogisticParams& p, TimeYears t1, TimeYears t2) {
  const double lb = std::log(p.b);
  const double x1 = p.c * (t1 - p.t0) - lb;
  const double x2 = p.c * (t2 - p.t0) - lb;
  return p.a / p.c * (detail::softplus(x2) - detail::softplus(x1));
}

inline std::optional<VolumeEB> asymptote(const LogisticParams& p) { return p.a; }

// Inflection year t0 + ln(b)/c: the growth-rate maximum and the 50 % level.
inline TimeYears inflection(const LogisticParams& p) { return p.t0 + std::log(p.b) / p.c; }

// --- demographic ----------------------------------------------------------

inline double eval(const DemographicParams& p, TimeYears t) {
  return p.c_h / p.tau_h * detail::arccot((p.t0_h - t) / p.tau_h);
}

inline double deriv1(const DemographicParams& p, TimeYears t) {
  const double u = (p.t0_h - t) / p.tau_h;
  return p.c_h / (p.tau_h * p.tau_h * (1.0 + u * u));
}

inline double deriv2(const DemographicParams& p, TimeYears t) {
  const double u = (p.t0_h - t) / p.tau_h;
  const double d = 1.0 + u * u;
  return 2.0 * p.c_h * u / (p.tau_h * p.tau_h * p.tau_h * d * d);
}

inline TimeYears inverse(const DemographicParams& p, double n) {
  const double n_max = M_PI * p.c_h / p.tau_h;
  if (!(n > 0.0 && n < n_max)) {
    throw DomainError("demographic inverse: population must be in (0, " +
                      std::to_string(n_max) + "), got " + std::to_string(n));
  }
  const double theta = n * p.tau_h / p.c_h;  // arcctg value, in (0, pi)
  return p.t0_h - p.tau_h / std::tan(theta);
}

inline double antiderivative(const DemographicParams& p, TimeYears t) {
  const double u = (p.t0_h - t) / p.tau_h;
  return -p.c_h * (u * detail::arccot(u) + 0.5 * std::log1p(u * u));
}

inline double integral(const DemographicParams& p, TimeYears t1, TimeYears t2) {
  return antiderivative(p, t2) - antiderivative(p, t1);
}

inline std::optional<double> asymptote(const DemographicParams& p) {
  return M_PI * p.c_h / p.tau_h;
}

// --- variant dispatch and Eigen array overloads ---------------------------

inline double eval(const VolumeModel& m, TimeYears t) {
  return std::visit([t](const auto& p) { return eval(p, t); }, m);
}
inline double deriv1(const VolumeModel& m, TimeYears t) {
  return std::visit([t](const auto& p) { return deriv1(p, t); }, m);
}
inline double deriv2(const VolumeModel& m, TimeYears t) {
  return std::visit([t](const auto& p) { return deriv2(p, t); }, m);
}
inline TimeYears inverse(const VolumeModel& m, VolumeEB v) {
  return std::visit([v](const auto& p) { return inverse(p, v); }, m);
}
inline double integral(const VolumeModel& m, TimeYears t1, TimeYears t2) {
  return std::visit([&](const auto& p) { return integral(p, t1, t2); }, m);
}
inline std::optional<VolumeEB> asymptote(const VolumeModel& m) {
  return std::visit([](const auto& p) { return asymptote(p); }, m);
}

// Growth rate per year: b for the exponential, c for the logistic.
inline double growth_rate(const VolumeModel& m) {
  if (const auto* e = std::get_if<ExponentialParams>(&m)) return e->b;
  return std::get<LogisticParams>(m).c;
}

template <class Derived>
auto eval(const ExponentialParams& p, const Eigen::ArrayBase<Derived>& t) {
  return p.a * ((t - p.t0) * p.b).exp();
}

template <class Derived>
auto eval(const LogisticParams& p, const Eigen::ArrayBase<Derived>& t) {
  return p.a / (1.0 + p.b * ((p.t0 - t) * p.c).exp());
}

template <class Derived>
auto eval(const DemographicParams& p, const Eigen::ArrayBase<Derived>& t) {
  return (p.c_h / p.tau_h) *
         ((p.t0_h - t) / p.tau_h).unaryExpr([](double u) { return detail::arccot(u); });
}

inline Eigen::ArrayXd eval(const VolumeModel& m, const Eigen::ArrayXd& t) {
  return std::visit([&](const auto& p) -> Eigen::ArrayXd { return eval(p, t); }, m);
}

}  // namespace datagrowth
