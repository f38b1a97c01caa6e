#pragma once

namespace pclab {

// Validity-condition diagnostics for the main asymptotic comparison: each
// ratio is a quantity the theory requires to grow without bound, reported at
// the working point. "Satisfied at scale lambda" means every ratio has at
// least that much headroom.
struct ConditionReport {
  double r12 = 0.0;   // T S(X,tau) / X
  double r13 = 0.0;   // tau S(X,tau) T / log^3 T
  double r14a = 0.0;  // T S(X,tau) / (X S(X,2 tau))
  double r14b = 0.0;  // T S(X,tau) / (tau X)
  double r14c = 0.0;  // T S(X,tau) X^5
  bool satisfied(double lambda = 10.0) const;
};

struct Thm1Prediction {
  double main1 = 0.0;      // (T/pi) S / tau
  double main2 = 0.0;      // T log^2 T / (pi tau X^{2/tau})
  double err_scale = 0.0;  // T log T sqrt(S) / (tau X^{1/tau}),
                           // the geometric mean: err^2 = pi^2 main1 main2
};

Thm1Prediction thm1_prediction(double X, double T, double tau, double S);

ConditionReport conditions(double X, double T, double tau, double S,
                           double S2tau);

struct ConjectureParams {
  double M = 3.0;        // height-exponent cap: applicable iff K <= H^M
  double epsilon = 0.05; // tau-range exponent: tau >= H^{-1+epsilon}
};

struct ConjectureValue {
  double value = 0.0;  // (T/pi) log min(X,T)
  bool applicable = false;
};

ConjectureValue conjecture_prediction(double X, double T, double tau,
                                      const ConjectureParams& cp);

// pi f / (T log X); X must lie in [T^epsilon, T / log T].
double corollary_ratio(double f_computed, double X, double T, double epsilon);

// S / (tau log X).
double s_asymptotic_ratio(double S, double X, double tau);

}  // namespace pclab
