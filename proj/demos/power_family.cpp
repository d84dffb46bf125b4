// Degree-k monomials in an eigenfamily form another eigenfamily with constants
// k lambda + k(k-1) mu and k^2 mu.
#include <iostream>

#include "lgh/morphisms.hpp"

int main() {
  using namespace lgh;
  const Eigenfamily base = u_family(2, {1.0, 0.5});
  const auto samples = sample_group(base.group, 100, 7);
  bool ok = true;
  for (unsigned k = 1; k <= 3; ++k) {
    const PowerFamily pf = power_family(base, k);
    const VerificationReport r =
        verify_eigenfamily(pf.as_eigenfamily(), compact_basis(base.group), samples);
    std::cout << "k = " << k << ": " << pf.members.size() << " members, lambda_k = " << pf.lambda_k.real()
              << ", mu_k = " << pf.mu_k.real() << ", residuals " << r.residual("tau") << " / " << r.residual("kappa")
              << (r.passed() ? "  ok\n" : "  FAILED\n");
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}
