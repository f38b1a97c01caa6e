#include "pclab/asympt.hpp"

#include <algorithm>
#include <cmath>

#include "pclab/errors.hpp"

namespace pclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool ConditionReport::satisfied(double lambda) const {
  return r12 >= lambda && r13 >= lambda && r14a >= lambda && r14b >= lambda &&
         r14c >= lambda;
}

Thm1Prediction thm1_prediction(double X, double T, double tau, double S) {
  Thm1Prediction p;
  const double lt = std::log(T);
  p.main1 = (T / kPi) * S / tau;
  p.main2 = T * lt * lt / (kPi * tau * std::pow(X, 2.0 / tau));
  p.err_scale = T * lt * std::sqrt(S) / (tau * std::pow(X, 1.0 / tau));
  return p;
}

ConditionReport conditions(double X, double T, double tau, double S,
                           double S2tau) {
  ConditionReport r;
  const double lt = std::log(T);
  r.r12 = T * S / X;
  r.r13 = tau * S * T / (lt * lt * lt);
  r.r14a = T * S / (X * S2tau);
  r.r14b = T * S / (tau * X);
  r.r14c = T * S * std::pow(X, 5.0);
  return r;
}

ConjectureValue conjecture_prediction(double X, double T, double tau,
                                      const ConjectureParams& cp) {
  ConjectureValue v;
  const double H = std::min(X, T);
  const double K = std::max(X, T);
  v.value = (T / kPi) * std::log(H);
  v.applicable =
      K <= std::pow(H, cp.M) && tau >= std::pow(H, -1.0 + cp.epsilon);
  return v;
}

double corollary_ratio(double f_computed, double X, double T, double epsilon) {
  const double lo = std::pow(T, epsilon);
  const double hi = T / std::log(T);
  if (!(X >= lo && X <= hi))
    throw RangeViolation("corollary applies for X in [T^eps, T/log T] = [" +
                         std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got X = " + std::to_string(X));
  return kPi * f_computed / (T * std::log(X));
}

double s_asymptotic_ratio(double S, double X, double tau) {
  return S / (tau * std::log(X));
}

}  // namespace pclab
