#ifndef QHS_SOBOLEV_HPP
#define QHS_SOBOLEV_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qhs/kernels.hpp"
#include "qhs/qcore.hpp"
#include "qhs/qhermite.hpp"
#include "qhs/ratfunc.hpp"

namespace qhs {

/// Coefficients tied to index n that only exist when n + 1 is in range.
struct RecurrenceTerms {
  RatFunc e7, f7;   ///< Dq HH_{n+1} = E7 H_n + F7 H_{n-1}
  RatFunc e8, f8;   ///< Xi_{1,n} Dq HH_{n+1} = E8 HH_n + F8 HH_{n-1}
  RatFunc xi2;      ///< Xi_{1,n} E_{4,n+1}
  RatFunc alpha;    ///< Xi_{1,n+1} E8 - Xi_{1,n} F_{4,n+1}
  RatFunc beta;     ///< Xi_{1,n+1} F8
};

/// theta_n and psi_n = 1 / ((1-q) theta_n + 1), defined when F_{1,n} != 0.
struct HypergeometricTerms {
  RatFunc theta;
  RatFunc psi;
};

/// The E/F ladder for one index n >= 2. Every entry is a canonical rational
/// function of x.
///
///   HH_n     = E1 H_n + F1 H_{n-1}
///   HH_{n-1} = E2 H_n + F2 H_{n-1},     Xi1 = E1 F2 - E2 F1
///   Dq HH_n  = E3 H_n + F3 H_{n-1}
///   Xi1 Dq HH_n  = E4 HH_n + F4 HH_{n-1}
///   Dq^2 HH_n    = E5 H_n + F5 H_{n-1}
///   Xi1 Dq^2 HH_n = E6 HH_n + F6 HH_{n-1}
struct Ladder {
  int n = 0;
  RatFunc e1, f1, e2, f2, xi1;
  RatFunc e3, f3, e4, f4;
  RatFunc e5, f5, e6, f6;
  RatFunc r, s, t;              ///< R Dq^2 HH + S Dq HH + T HH = 0
  RatFunc r_bar, s_bar, t_bar;  ///< same equation in the Dq^{-1} Dq form
  std::optional<RecurrenceTerms> recurrence;
  std::optional<HypergeometricTerms> hypergeometric;
};

/// Sobolev-type family HH_0..HH_N for the inner product
///   <f,g> + lambda (Dq^j f)(alpha) (Dq^j g)(alpha),
/// computed exactly from the connection formula
///   HH_n = H_n - c_n K^{(0,j)}_{n-1}(x, alpha),
///   c_n  = lambda_hat [n]_q^{(j)} H_{n-j}(alpha) / (1 + lambda_hat K^{(j,j)}_{n-1}(alpha, alpha)),
/// with normalized kernels and lambda_hat = lambda / ((1-q)(q,-1,-q;q)_inf).
///
/// Polynomials are built eagerly; ladder entries are computed on first use
/// and cached. Concurrent reads are safe.
class SobolevFamily {
 public:
  /// Requires a valid context with an ExactMass; throws std::domain_error otherwise.
  SobolevFamily(const QContext& ctx, int depth);

  SobolevFamily(const SobolevFamily&) = delete;
  SobolevFamily& operator=(const SobolevFamily&) = delete;

  const QContext& context() const { return ctx_; }
  const Rational& q() const { return ctx_.q; }
  const Rational& alpha() const { return ctx_.alpha; }
  int j() const { return ctx_.j; }
  const Rational& mass_hat() const { return mass_hat_; }
  const HermiteFamily& base() const { return base_; }
  int depth() const { return static_cast<int>(polys_.size()) - 1; }

  const Poly& poly(int n) const;

  /// c_n above (zero for n = 0 and for n < j).
  const Rational& mass_factor(int n) const;

  /// A/B pair of the connection formula for index n >= 1 at y = alpha.
  const ABPair& ab(int n) const;
  /// C/D pairs for index n >= 1 at y = alpha.
  const CDPair& cd(int n) const;

  /// Ladder for 2 <= n <= depth; recurrence terms present when n < depth.
  const Ladder& ladder(int n) const;

 private:
  std::pair<RatFunc, RatFunc> first_connection(int n) const;
  std::shared_ptr<const Ladder> build_core(int n) const;

  QContext ctx_;
  Rational mass_hat_;
  HermiteFamily base_;
  std::vector<Poly> polys_;
  std::vector<Rational> mass_factors_;

  mutable std::recursive_mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<ABPair>> ab_cache_;
  mutable std::map<int, std::unique_ptr<CDPair>> cd_cache_;
  mutable std::map<int, std::shared_ptr<const Ladder>> core_cache_;
  mutable std::map<int, std::shared_ptr<const Ladder>> ladder_cache_;
};

inline const Poly& sobolev_poly(const SobolevFamily& fam, int n) { return fam.poly(n); }

/// Dq HH_n from its closed form [n]_q H_{n-1} - c_n K^{(1,j)}_{n-1}(x, alpha).
Poly dq_sobolev(const SobolevFamily& fam, int n);
/// Dq^2 HH_n from its closed form [n]_q^{(2)} H_{n-2} - c_n K^{(2,j)}_{n-1}(x, alpha).
Poly dq2_sobolev(const SobolevFamily& fam, int n);

/// Builds the ladder for index n (same as fam.ladder(n)).
inline const Ladder& ladder_build(const SobolevFamily& fam, int n) { return fam.ladder(n); }

/// (Dq^j HH_n)(alpha) - [n]^{(j)} H_{n-j}(alpha) / (1 + lambda_hat K^{(j,j)}_{n-1}(alpha, alpha)).
Rational derivative_at_alpha_residual(const SobolevFamily& fam, int n);

/// (E1 H_n + F1 H_{n-1} - HH_n,  E2 H_n + F2 H_{n-1} - HH_{n-1}).
std::pair<RatFunc, RatFunc> connection_residual(const SobolevFamily& fam, int n);

/// (Xi1 H_n - |HH_n HH_{n-1}; F1 F2|,  Xi1 H_{n-1} + |HH_n HH_{n-1}; E1 E2|).
std::pair<RatFunc, RatFunc> xi_identities_residual(const SobolevFamily& fam, int n);

/// Xi1 Dq HH_n - E4 HH_n - F4 HH_{n-1}, with Dq applied to HH_n directly.
RatFunc structure_relation_residual(const SobolevFamily& fam, int n);

/// Xi1 Dq^2 HH_n - E6 HH_n - F6 HH_{n-1}.
RatFunc second_structure_residual(const SobolevFamily& fam, int n);

/// Xi2 HH_{n+1} - alpha_n HH_n - beta_n HH_{n-1}; requires 2 <= n < depth.
RatFunc three_term_residual(const SobolevFamily& fam, int n);

struct SdeCoefficients {
  RatFunc r, s, t;
};

SdeCoefficients sde1_coeffs(const SobolevFamily& fam, int n);
/// R Dq^2 HH_n + S Dq HH_n + T HH_n. Zero for n = 0 (constant polynomial).
RatFunc sde1_residual(const SobolevFamily& fam, int n);

SdeCoefficients sde2_coeffs(const SobolevFamily& fam, int n);
/// Rbar Dq^{-1} Dq HH_n + Sbar Dq^{-1} HH_n + Tbar HH_n. Zero for n = 0.
RatFunc sde2_residual(const SobolevFamily& fam, int n);

/// Whether the 3phi2 representation is defined at n (lambda_hat > 0 and F1 != 0).
bool hypergeometric_rep_defined(const SobolevFamily& fam, int n);

/// -F1 (1 - psi/q) q^{C(n,2)-n+2} / ([n] psi (1-q)) * 3phi2(q^{-n}, 1/x, psi; 0, psi/q; q, -q x) - HH_n.
/// Throws std::domain_error when lambda_hat = 0 (use hermite_hypergeometric) or F1 = 0.
RatFunc hypergeometric_rep_residual(const SobolevFamily& fam, int n);

}  // namespace qhs

#endif  // QHS_SOBOLEV_HPP
