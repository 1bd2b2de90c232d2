#pragma once

#include <memory>
#include <string>
#include <variant>

#include "siegel/cone.hpp"
#include "siegel/selfadjoint.hpp"

namespace siegel {

/// The open cone Omega in F defining D = rho^{-1}(Omega).
class OmegaCone {
 public:
  struct HalfLine {};
  struct PositiveDefinite {
    SelfAdjointLayout layout;
  };
  struct Spin {
    int q = 1;
  };
  /// Interior of the closed cone generated by Phi(E).
  struct GeneratedInterior {
    std::shared_ptr<const ConeModel> cone;
  };
  using Kind = std::variant<HalfLine, PositiveDefinite, Spin, GeneratedInterior>;

  OmegaCone() = default;
  explicit OmegaCone(Kind kind) : kind_(std::move(kind)) {}

  static OmegaCone half_line() { return OmegaCone(HalfLine{}); }
  static OmegaCone positive_definite(Field f, int r) { return OmegaCone(PositiveDefinite{{f, r}}); }
  static OmegaCone spin(int q) { return OmegaCone(Spin{q}); }
  static OmegaCone generated_interior(std::shared_ptr<const ConeModel> cone) {
    return OmegaCone(GeneratedInterior{std::move(cone)});
  }

  const Kind& kind() const { return kind_; }
  std::string describe() const;

  bool contains(const RVec& h) const;
  /// Closure membership up to `tol` (relative to |h|).
  bool closure_contains(const RVec& h, double tol = 1e-9) const;
  /// True iff <lambda, .> is strictly positive on closure(Omega) minus 0.
  bool dual_interior_contains(const RVec& lambda) const;

 private:
  Kind kind_ = HalfLine{};
};

/// A Siegel-type domain: Hermitian form, generated cone C, cone Omega with
/// Omega = Omega + closure(C), and a base point e_Omega in Omega.
struct SiegelSpec {
  std::string name;
  HermitianForm form;
  std::shared_ptr<const ConeModel> cone;
  OmegaCone omega;
  RVec base_point;
  int rank = 1;

  int n() const { return form.n(); }
  int m() const { return form.m(); }
};

/// Validates dimensions and that the base point lies in Omega. A GeneratedInterior
/// Omega without a cone handle is bound to the spec's own cone model.
SiegelSpec make_siegel_spec(std::string name, HermitianForm form, OmegaCone omega, RVec base_point,
                            int rank = 1, int generator_count = 0);

/// rho(p) in Omega.
bool in_domain(const SiegelSpec& spec, const AmbientPoint& p);

/// Samples h in Omega and generators h' = Phi(zeta) and counts how often
/// h + h' leaves Omega. Zero for a correctly configured cone.
int omega_absorption_failures(const SiegelSpec& spec, int samples, std::uint64_t seed);

}  // namespace siegel
