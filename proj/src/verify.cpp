#include "qhs/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "qhs/kernels.hpp"
#include "qhs/ratfunc.hpp"
#include "qhs/sobolev.hpp"

namespace qhs {

namespace {

struct Inputs {
  const QContext& ctx;
  const HermiteFamily& base;
  const SobolevFamily& sobolev;
  int n_max;
};

using Sink = std::vector<CheckResult>;
using Runner = std::function<void(const Inputs&, const std::string&, Sink&)>;

void record(Sink& out, const std::string& name, int n, const RatFunc& residual) {
  out.push_back({name, n, residual.is_zero(), residual.is_zero() ? "" : residual.to_string()});
}

void record(Sink& out, const std::string& name, int n, const Rational& residual) {
  out.push_back({name, n, is_zero(residual), is_zero(residual) ? "" : to_string(residual)});
}

void record_pair(Sink& out, const std::string& name, int n, const std::pair<RatFunc, RatFunc>& r) {
  const bool ok = r.first.is_zero() && r.second.is_zero();
  out.push_back({name, n, ok, ok ? "" : "(" + r.first.to_string() + ", " + r.second.to_string() + ")"});
}

// Evaluates `body`, turning a thrown IdentityViolation into a failed check.
void guarded(Sink& out, const std::string& name, int n, const std::function<void()>& body) {
  try {
    body();
  } catch (const IdentityViolation& e) {
    out.push_back({name, n, false, e.what()});
  }
}

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> checks = {
      {"recurrence",
       [](const Inputs& in, const std::string& name, Sink& out) {
         const Poly x = Poly::x();
         for (int n = 0; n <= std::min(in.n_max, in.base.depth() - 1); ++n) {
           const Poly rhs = x * in.base.poly(n) - in.base.gamma(n) * in.base.poly(n - 1);
           record(out, name, n, RatFunc(in.base.poly(n + 1) - rhs));
         }
       }},
      {"hermite-hypergeometric",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= std::min(in.n_max, in.base.depth()); ++n) {
           record(out, name, n, RatFunc(hermite_hypergeometric(n, in.base.q()) - in.base.poly(n)));
         }
       }},
      {"forward-shift",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= std::min(in.n_max, in.base.depth()); ++n) {
           Poly worst;
           for (int k = 0; k <= n + 1 && worst.is_zero(); ++k) {
             worst = dq_iter(in.base.poly(n), in.base.q(), k) - forward_shift(n, k, in.base);
           }
           record(out, name, n, RatFunc(worst));
         }
       }},
      {"sode-classical",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= std::min(in.n_max, in.base.depth()); ++n) {
           record(out, name, n, RatFunc(classical_sode_residual(n, in.base)));
         }
       }},
      {"christoffel-darboux",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= std::min(in.n_max, in.base.depth() - 1); ++n) {
           guarded(out, name, n, [&] {
             const Poly direct = kernel_direct(in.base, n, 0, 0, in.ctx.alpha).poly;
             record(out, name, n, RatFunc(cd_kernel(in.base, n, in.ctx.alpha) - direct));
           });
         }
       }},
      {"kernel-ab",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 1; n <= std::min(in.n_max, in.base.depth()); ++n) {
           const ABPair p = ab_pair(in.base, n, in.ctx.j, in.ctx.alpha);
           record(out, name, n, kernel_residual(in.base, n, p.a, p.b, 0, in.ctx.j, in.ctx.alpha));
         }
       }},
      {"kernel-cd1",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 1; n <= std::min(in.n_max, in.base.depth()); ++n) {
           const CDPair p = cd_pairs(in.base, n, in.ctx.j, in.ctx.alpha);
           record(out, name, n, kernel_residual(in.base, n, p.c1, p.d1, 1, in.ctx.j, in.ctx.alpha));
         }
       }},
      {"kernel-cd2",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 1; n <= std::min(in.n_max, in.base.depth()); ++n) {
           const CDPair p = cd_pairs(in.base, n, in.ctx.j, in.ctx.alpha);
           record(out, name, n, kernel_residual(in.base, n, p.c2, p.d2, 2, in.ctx.j, in.ctx.alpha));
         }
       }},
      {"conxf-derivative",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= in.n_max; ++n) record(out, name, n, derivative_at_alpha_residual(in.sobolev, n));
       }},
      {"sobolev-coincidence",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= std::min(in.n_max, in.ctx.j); ++n) {
           record(out, name, n, RatFunc(in.sobolev.poly(n) - in.sobolev.base().poly(n)));
         }
       }},
      {"dq-sobolev",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 0; n <= in.n_max; ++n) {
           const Poly& p = in.sobolev.poly(n);
           const Poly r1 = dq_sobolev(in.sobolev, n) - dq(p, in.ctx.q);
           const Poly r2 = dq2_sobolev(in.sobolev, n) - dq_iter(p, in.ctx.q, 2);
           record_pair(out, name, n, {RatFunc(r1), RatFunc(r2)});
         }
       }},
      {"connection",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record_pair(out, name, n, connection_residual(in.sobolev, n));
       }},
      {"xi",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record_pair(out, name, n, xi_identities_residual(in.sobolev, n));
       }},
      {"sthst",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record(out, name, n, structure_relation_residual(in.sobolev, n));
       }},
      {"2sr",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record(out, name, n, second_structure_residual(in.sobolev, n));
       }},
      {"3trr",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record(out, name, n, three_term_residual(in.sobolev, n));
       }},
      {"sde1",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record(out, name, n, sde1_residual(in.sobolev, n));
       }},
      {"sde2",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) record(out, name, n, sde2_residual(in.sobolev, n));
       }},
      {"3phi2",
       [](const Inputs& in, const std::string& name, Sink& out) {
         for (int n = 2; n <= in.n_max; ++n) {
           if (hypergeometric_rep_defined(in.sobolev, n)) {
             record(out, name, n, hypergeometric_rep_residual(in.sobolev, n));
           }
         }
       }},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, runner] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_checks(const QContext& ctx, const VerifyOptions& options) {
  ctx.validate();
  if (options.n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  const auto& reg = registry();
  std::vector<std::string> selected = options.checks.empty() ? available_checks() : options.checks;
  for (const auto& name : selected) {
    if (!reg.count(name)) throw std::invalid_argument("unknown check '" + name + "'");
  }
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  // Depth n_max + 1 so the three-term recurrence reaches n = n_max.
  const SobolevFamily sobolev(ctx, options.n_max + 1);
  const HermiteFamily& base = options.base_override ? *options.base_override : sobolev.base();
  const Inputs inputs{ctx, base, sobolev, options.n_max};

  std::vector<CheckResult> results;
  for (const auto& name : selected) reg.at(name)(inputs, name, results);
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return a.identity != b.identity ? a.identity < b.identity : a.n < b.n;
  });
  return results;
}

}  // namespace qhs
