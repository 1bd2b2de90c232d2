#pragma once

#include <vector>

#include "siegel/test_function.hpp"

namespace siegel {

/// Coefficients v = (v_1, ..., v_m) of the polynomial analytic disc
///   A_v(w) = ( sum_j v_j w^j,  i sum_j Phi(v_j) + 2i sum_{k<j} Phi(v_j, v_k) w^(j-k) ),
/// whose boundary circle lies on the quadric rho = 0 and whose centre is (0, i Psi(v)).
struct DiscCoefficients {
  std::vector<CVec> v;
};

/// N equally spaced nodes on the unit circle with uniform weights 1/N.
struct BoundarySample {
  std::vector<cplx> nodes;
  std::vector<double> weights;

  static BoundarySample uniform(int n_theta);
};

inline constexpr int kDefaultNodes = 256;

AmbientPoint disc_eval(const HermitianForm& form, const DiscCoefficients& d, cplx w);

/// max over circle nodes of |rho(A_v(w))|_inf.
double boundary_residual(const HermitianForm& form, const DiscCoefficients& d, int n_theta = kDefaultNodes);

/// iota(base) * (A_v(w) + (0, i hpp)).
AmbientPoint translated_disc_point(const HermitianForm& form, const DiscCoefficients& d, const NPoint& base,
                                   const RVec& hpp, cplx w);

std::vector<AmbientPoint> translated_disc_nodes(const HermitianForm& form, const DiscCoefficients& d,
                                                const NPoint& base, const RVec& hpp, int n_theta = kDefaultNodes);

/// Throws DomainError unless the closed translated disc (circle nodes plus a
/// polar grid of interior points) lies in D and in the domain of `f`.
void check_disc_in_domain(const TestFunction& f, const DiscCoefficients& d, const NPoint& base, const RVec& hpp,
                          int n_theta = kDefaultNodes);

struct SubmeanResult {
  double lhs = 0.0;       // |f(centre)|^q
  double rhs = 0.0;       // circle average of |f|^q
  double exponent = 1.0;  // q = min(1, p)
};

/// Sub-mean-value inequality for |f|^min(1,p) over a translated disc.
SubmeanResult submean_check(const TestFunction& f, const DiscCoefficients& d, const NPoint& base, const RVec& hpp,
                            double p, int n_theta = kDefaultNodes);

/// The same circle average computed through the boundary measure: push the
/// nodes to N by pi o A_v, translate by `base` in N and evaluate the slice f_hpp.
double convolution_average(const TestFunction& f, const DiscCoefficients& d, const NPoint& base, const RVec& hpp,
                           double p, int n_theta = kDefaultNodes);

}  // namespace siegel
