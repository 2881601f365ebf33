#include "subword/verify.hpp"

#include <random>
#include <sstream>

namespace swc {

SuiteResult verify_hopf_suite(const std::vector<BasisKey>& corpus) {
  SuiteResult result;
  const BialgebraReport report = verify_bialgebra(corpus);
  result.checks += static_cast<int>(corpus.size());
  if (!report.pass) result.record(false, report.failures.front());
  // antipode convolution: m(S (x) id)Delta = u eps = m(id (x) S)Delta
  for (size_t i = 0; i < corpus.size(); ++i) {
    const BasisKey& x = corpus[i];
    const HopfVector expected =
        x.degree() == 0 ? hopf_unit() : HopfVector{};
    const Tensor2 dx = coproduct(single(x));
    HopfVector left, right;
    for (const auto& [pair, coeff] : dx) {
      HopfVector ls = antipode(single(pair.first));
      ls *= coeff;
      left += hopf_product(ls, single(pair.second));
      HopfVector rs = antipode(single(pair.second));
      rs *= coeff;
      right += hopf_product(single(pair.first), rs);
    }
    result.record(left == expected,
                  "key#" + std::to_string(i + 1) + ": m(S x id)Delta != u eps");
    result.record(right == expected,
                  "key#" + std::to_string(i + 1) + ": m(id x S)Delta != u eps");
  }
  return result;
}

SuiteResult verify_decomposition_suite(const std::vector<SubwordInstance>& instances) {
  SuiteResult result;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const SubwordInstance& inst = instances[idx];
    for (const auto& facet : enumerate_facets(inst).facets) {
      const RootList rl = root_list(inst, facet);
      for (const Flat& flat : enumerate_flats(rl)) {
        const DecompositionReport report = verify_decomposition(rl, flat);
        std::ostringstream what;
        what << "instance#" << idx + 1 << " facet {";
        for (size_t i = 0; i < facet.size(); ++i) what << (i ? "," : "") << facet[i] + 1;
        what << "}: " << report.detail;
        result.record(report.pass, what.str());
      }
    }
  }
  return result;
}

SuiteResult verify_cluster_flat_suite(const ClusterInstance& cluster) {
  SuiteResult result;
  for (const auto& facet : enumerate_facets(cluster.instance).facets) {
    const RootList rl = root_list(cluster.instance, facet);
    for (const Flat& flat : enumerate_flats(rl)) {
      if (flat.dim < 1 || !flat_irreducible(rl, flat)) continue;
      const ClusterFlatReport report = verify_cluster_flat(cluster, facet, flat);
      result.record(report.pass, report.detail);
    }
  }
  return result;
}

SuiteResult verify_appendix_a_suite(int samples, int max_length, unsigned seed) {
  SuiteResult result;
  std::mt19937 rng(seed);
  const std::vector<std::string> types = {"A3", "B3", "tA2"};
  std::vector<CoxeterSystem> systems;
  for (const auto& name : types) systems.push_back(build_system(coxeter_matrix_of_type(name)));
  for (int trial = 0; trial < samples; ++trial) {
    const CoxeterSystem& sys = systems[rng() % systems.size()];
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_length));
    Word p;
    for (int i = 0; i < len; ++i) p.push_back(static_cast<int>(rng() % static_cast<unsigned>(sys.rank)));
    // subspace: span of a random subset of inv(P), or a random parabolic
    std::vector<IVec> spanning;
    if (rng() % 2 == 0) {
      const std::vector<IVec> inv = inversions(sys, p);
      const int picks = 1 + static_cast<int>(rng() % 3u);
      for (int i = 0; i < picks; ++i)
        spanning.push_back(inv[static_cast<size_t>(rng() % inv.size())]);
    } else {
      for (int i = 0; i < sys.rank; ++i)
        if (rng() % 2 == 0) spanning.push_back(simple_root(sys, i));
      if (spanning.empty()) spanning.push_back(simple_root(sys, 0));
    }
    const RootSubsystem sub = RootSubsystem::span_of_roots(sys, spanning);
    bool ok = true;
    std::string what;
    try {
      const RestrictedWord restricted = restrict_inversions(sys, p, sub);
      if (!restricted.kept_roots.empty()) {
        IVec first = restricted.kept_roots.front();
        if (root_sign(first) < 0 || !sub.is_simple(first)) {
          ok = false;
          what = "first retained inversion is not simple";
        }
      }
      // transported inversion list must reproduce the filtered list exactly
      const std::vector<IVec> abstract = inversions(restricted.system, restricted.word);
      for (size_t k = 0; ok && k < abstract.size(); ++k) {
        IVec host = IVec::Zero(sys.rank);
        for (Eigen::Index s = 0; s < abstract[k].size(); ++s)
          for (int t = 0; t < sys.rank; ++t)
            host(t) += abstract[k](s) * restricted.simples[static_cast<size_t>(s)](t);
        if (host != restricted.kept_roots[k]) {
          ok = false;
          what = "restricted word does not reproduce the filtered inversion list";
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      what = e.what();
    }
    result.record(ok, "trial#" + std::to_string(trial + 1) + ": " + what);
  }
  return result;
}

SuiteResult verify_antipode_agreement_suite(const std::vector<BasisKey>& corpus) {
  SuiteResult result;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const BasisKey& key = corpus[i];
    const HopfVector takeuchi = takeuchi_antipode(single(key));
    const HopfVector direct = antipode(single(key));
    result.record(takeuchi == direct,
                  "key#" + std::to_string(i + 1) + ": antipode formulas disagree");
    for (const AntipodeClassTerm& term : antipode_classes(key)) {
      result.record(term.orientation_count >= 1,
                    "key#" + std::to_string(i + 1) + ": class coefficient vanished");
    }
  }
  return result;
}

}  // namespace swc
