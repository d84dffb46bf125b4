// Continues the unitary eigenfamily of SU(2) to SL(2,R) and checks it with negated constants.
#include <iostream>

#include "lgh/duality.hpp"

int main() {
  using namespace lgh;
  const DualPair pair = dual_pair(GroupId::slr(2));
  std::cout << to_string(pair.noncompact) << " ~ " << to_string(pair.compact) << ": dim k = " << pair.k_basis.size()
            << ", dim p = " << pair.p_basis.size() << ", involution " << pair.involution.name() << "\n";

  const Eigenfamily fam = su_family(2, {1.0, Complex(0.0, 1.0)});
  const auto samples = sample_noncompact(pair, 100, 0.5, 42);
  const VerificationReport r = verify_dual_eigenfamily(pair, fam, samples);
  std::cout << "lambda = " << -fam.lambda.real() << ", mu = " << -fam.mu.real() << ": max tau residual "
            << r.residual("tau") << ", max kappa residual " << r.residual("kappa")
            << (r.passed() ? "  ok\n" : "  FAILED\n");
  return r.passed() ? 0 : 1;
}
