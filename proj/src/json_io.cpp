#include "subword/json_io.hpp"

#include <stdexcept>

namespace swc {

namespace {

long long small_int(const Int& v) {
  if (!v.fits_slong_p()) throw std::invalid_argument("integer too large for JSON output");
  return v.get_si();
}

}  // namespace

ordered_json system_to_json(const CoxeterSystem& sys) {
  ordered_json j;
  j["rank"] = sys.rank;
  ordered_json m = ordered_json::array();
  for (int i = 0; i < sys.rank; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < sys.rank; ++k) row.push_back(sys.coxeter(i, k));
    m.push_back(row);
  }
  j["m"] = m;
  ordered_json cartan = ordered_json::array();
  for (int i = 0; i < sys.rank; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < sys.rank; ++k) row.push_back(small_int(sys.cartan(i, k)));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  return j;
}

CoxeterSystem system_from_json(const json& j) {
  if (!j.contains("m")) throw std::invalid_argument("system JSON needs an \"m\" matrix");
  const auto& m = j.at("m");
  const int n = j.contains("rank") ? j.at("rank").get<int>() : static_cast<int>(m.size());
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("rank does not match the m matrix");
  Eigen::MatrixXi cox(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m.at(i).size()) != n)
      throw std::invalid_argument("m matrix is not square");
    for (int k = 0; k < n; ++k) cox(i, k) = m.at(i).at(k).get<int>();
  }
  if (!j.contains("cartan")) return build_system(cox);
  IMat cartan(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      cartan(i, k) = Int(static_cast<long>(j.at("cartan").at(i).at(k).get<long long>()));
  return build_system(cox, cartan);
}

ordered_json word_to_json(const Word& word) {
  ordered_json j = ordered_json::array();
  for (const int letter : word) j.push_back(letter + 1);
  return j;
}

Word word_from_json(const json& j) {
  Word word;
  for (const auto& v : j) {
    const int letter = v.get<int>();
    if (letter < 1) throw std::invalid_argument("word letters are 1-based");
    word.push_back(letter - 1);
  }
  return word;
}

ordered_json positions_to_json(const std::vector<int>& positions) {
  ordered_json j = ordered_json::array();
  for (const int p : positions) j.push_back(p + 1);
  return j;
}

std::vector<int> positions_from_json(const json& j, size_t limit) {
  std::vector<int> out;
  for (const auto& v : j) {
    const int p = v.get<int>();
    if (p < 1 || p > static_cast<int>(limit))
      throw std::invalid_argument("position out of range (positions are 1-based)");
    out.push_back(p - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ordered_json instance_to_json(const SubwordInstance& inst) {
  ordered_json j;
  j["system"] = system_to_json(inst.sys);
  j["word"] = word_to_json(inst.word);
  j["pi_word"] = word_to_json(reduced_word_of(inst.sys, inst.pi));
  return j;
}

SubwordInstance instance_from_json(const json& j) {
  CoxeterSystem sys = system_from_json(j.at("system"));
  Word word = word_from_json(j.at("word"));
  Word pi_word = word_from_json(j.at("pi_word"));
  return make_instance(std::move(sys), std::move(word), pi_word);
}

ordered_json root_to_json(const IVec& root) {
  ordered_json j = ordered_json::array();
  for (Eigen::Index i = 0; i < root.size(); ++i) j.push_back(small_int(root(i)));
  return j;
}

ordered_json roots_to_json(const std::vector<IVec>& roots) {
  ordered_json j = ordered_json::array();
  for (const IVec& r : roots) j.push_back(root_to_json(r));
  return j;
}

ordered_json flat_to_json(const Flat& flat) {
  ordered_json j;
  j["J"] = positions_to_json(flat.positions);
  j["dim"] = flat.dim;
  return j;
}

ordered_json restricted_tuple_to_json(const RestrictedTuple& t) {
  ordered_json j;
  j["system"] = system_to_json(t.system);
  j["beta"] = roots_to_json(t.beta);
  j["simples"] = roots_to_json(t.simples);
  j["word"] = word_to_json(t.word);
  j["facet"] = positions_to_json(t.facet);
  j["pi_word"] = word_to_json(t.pi_word);
  j["host_positions"] = positions_to_json(t.host_positions);
  j["bar_facet"] = positions_to_json(t.bar_facet);
  return j;
}

ordered_json key_to_json(const BasisKey& key) {
  ordered_json j;
  ordered_json system;
  system["rank"] = key.degree();
  ordered_json m = ordered_json::array();
  for (Eigen::Index i = 0; i < key.coxeter.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < key.coxeter.cols(); ++k) row.push_back(key.coxeter(i, k));
    m.push_back(row);
  }
  system["m"] = m;
  j["system"] = system;
  j["word"] = word_to_json(key.word);
  j["facet"] = positions_to_json(key.facet);
  j["pi_word"] = word_to_json(complement_word(key.word, key.facet));
  return j;
}

BasisKey key_from_json(const json& j) {
  const SubwordInstance inst = [&] {
    if (j.contains("pi_word")) return instance_from_json(j);
    json copy = j;
    copy["pi_word"] = json::array();
    CoxeterSystem sys = system_from_json(copy.at("system"));
    Word word = word_from_json(copy.at("word"));
    std::vector<int> facet = positions_from_json(copy.at("facet"), word.size());
    Word pi_word = complement_word(word, facet);
    return make_instance(std::move(sys), std::move(word), pi_word);
  }();
  const std::vector<int> facet = positions_from_json(j.at("facet"), inst.word.size());
  return canonicalize(inst, facet);
}

ordered_json hopf_to_json(const HopfVector& v) {
  ordered_json j = ordered_json::array();
  for (const auto& [key, coeff] : v.terms) {
    ordered_json term;
    term["coeff"] = rat_to_string(coeff);
    term["key"] = key_to_json(key);
    j.push_back(term);
  }
  return j;
}

HopfVector hopf_from_json(const json& j) {
  HopfVector v;
  for (const auto& term : j)
    v.add(key_from_json(term.at("key")), rat_from_string(term.at("coeff").get<std::string>()));
  return v;
}

ordered_json tensor_to_json(const Tensor2& t) {
  ordered_json j = ordered_json::array();
  for (const auto& [pair, coeff] : t) {
    ordered_json term;
    term["coeff"] = rat_to_string(coeff);
    term["left"] = key_to_json(pair.first);
    term["right"] = key_to_json(pair.second);
    j.push_back(term);
  }
  return j;
}

Word reduced_word_of(const CoxeterSystem& sys, const IMat& g) {
  Word reversed;
  IMat m = g;
  while (true) {
    int descent = -1;
    for (int i = 0; i < sys.rank; ++i)
      if (root_sign(m.col(i)) < 0) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    m = m * generator(sys, descent);
    reversed.push_back(descent);
  }
  if (m != identity_element(sys))
    throw std::invalid_argument("matrix is not a group element");
  return Word(reversed.rbegin(), reversed.rend());
}

}  // namespace swc
