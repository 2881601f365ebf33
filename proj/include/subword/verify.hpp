#pragma once

#include <string>
#include <vector>

#include "subword/clusters.hpp"
#include "subword/hopf.hpp"

namespace swc {

struct SuiteResult {
  bool pass = true;
  int checks = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
};

/// Bialgebra axioms plus the antipode convolution identity over the key
/// corpus.
SuiteResult verify_hopf_suite(const std::vector<BasisKey>& corpus);

/// Root-function transport and link isomorphism for every flat of every
/// facet of the given instances.
SuiteResult verify_decomposition_suite(const std::vector<SubwordInstance>& instances);

/// Q_F = c_F w0(c_F) for every facet and every irreducible flat of
/// dimension >= 1 of a cluster instance.
SuiteResult verify_cluster_flat_suite(const ClusterInstance& cluster);

/// Random words over A3, B3, affine A2 with random flats of inv(P) and
/// random parabolic subspaces: restriction succeeds, reproduces the
/// filtered inversion list exactly, and the first retained inversion is
/// simple.
SuiteResult verify_appendix_a_suite(int samples, int max_length, unsigned seed);

/// takeuchi_antipode and the cancellation-free antipode agree on every
/// corpus key; every Psi0 class coefficient is sign-coherent.
SuiteResult verify_antipode_agreement_suite(const std::vector<BasisKey>& corpus);

}  // namespace swc
