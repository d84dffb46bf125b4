// The Hopf map z/w on SU(2), built as a quotient of two members of the unitary eigenfamily.
#include <iostream>

#include "lgh/morphisms.hpp"

int main() {
  using namespace lgh;
  const Eigenfamily fam = su_family(2, unit_vector(0, 2));
  const RationalMorphism hopf = quotient_morphism(fam, {{{1, 0}, 1.0}}, {{{0, 1}, 1.0}}, 0.1);
  const SignedBasis basis = compact_basis(fam.group);
  const auto samples =
      sample_domain(basis, 100, 0.5, 42, [&](const ComplexMatrix& x) { return in_quotient_domain(hopf, x); });

  const VerificationReport r = verify_harmonic_morphism(hopf, basis, samples, 1e-9);
  std::cout << "Hopf map on SU(2): samples " << r.samples_used << ", max |tau| " << r.residual("tau")
            << ", max |kappa| " << r.residual("kappa") << (r.passed() ? "  ok\n" : "  FAILED\n");
  return r.passed() ? 0 : 1;
}
