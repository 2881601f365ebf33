#include "subword/subword.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace swc {

namespace {

void check_word(const CoxeterSystem& sys, const Word& word) {
  for (const int letter : word)
    if (letter < 0 || letter >= sys.rank)
      throw std::invalid_argument("word letter out of range");
}

void check_positions(size_t word_size, const std::vector<int>& positions) {
  int prev = -1;
  for (const int p : positions) {
    if (p < 0 || p >= static_cast<int>(word_size))
      throw std::invalid_argument("position out of range");
    if (p <= prev) throw std::invalid_argument("positions must be strictly increasing");
    prev = p;
  }
}

}  // namespace

SubwordInstance make_instance(CoxeterSystem sys, Word word, const Word& pi_word) {
  check_word(sys, pi_word);
  IMat pi = word_element(sys, pi_word);
  return make_instance(std::move(sys), std::move(word), std::move(pi));
}

SubwordInstance make_instance(CoxeterSystem sys, Word word, IMat pi) {
  check_word(sys, word);
  SubwordInstance inst;
  inst.pi_length = element_length(sys, pi);
  inst.sys = std::move(sys);
  inst.word = std::move(word);
  inst.pi = std::move(pi);
  return inst;
}

bool contains_reduced(const CoxeterSystem& sys, const Word& word, const IMat& pi,
                      int pi_length) {
  // u = v^-1 pi for the prefix v taken so far; taking a letter whenever it
  // shortens u finds the leftmost reduced subword when one exists. The take
  // condition l(su) < l(u) reads off a column sign of u^-1.
  IMat u_inv = inverse_element(sys, pi);
  int taken = 0;
  for (const int letter : word) {
    if (taken == pi_length) break;
    if (root_sign(u_inv.col(letter)) < 0) {
      u_inv = u_inv * generator(sys, letter);
      ++taken;
    }
  }
  return taken == pi_length;
}

FacetEnumeration enumerate_facets(const SubwordInstance& inst) {
  FacetEnumeration out;
  const int r = static_cast<int>(inst.word.size());
  const int facet_size = r - inst.pi_length;
  if (facet_size < 0) {
    out.void_complex = true;
    return out;
  }
  // DFS over positions; u = v^-1 pi is tracked through its inverse so the
  // take condition is a column sign. Skipping first yields lex order.
  const IMat pi_inv = inverse_element(inst.sys, inst.pi);
  std::vector<int> skipped;
  skipped.reserve(static_cast<size_t>(facet_size));
  auto dfs = [&](auto&& self, int pos, const IMat& u_inv, int taken) -> void {
    const int remaining = r - pos;
    const int needed = inst.pi_length - taken;
    if (needed > remaining) return;
    if (pos == r) {
      out.facets.push_back(skipped);
      return;
    }
    const int letter = inst.word[static_cast<size_t>(pos)];
    if (static_cast<int>(skipped.size()) < facet_size) {
      skipped.push_back(pos);
      self(self, pos + 1, u_inv, taken);
      skipped.pop_back();
    }
    if (needed > 0 && root_sign(u_inv.col(letter)) < 0)
      self(self, pos + 1, IMat(u_inv * generator(inst.sys, letter)), taken + 1);
  };
  dfs(dfs, 0, pi_inv, 0);
  out.void_complex = out.facets.empty();
  return out;
}

bool is_face(const SubwordInstance& inst, const std::vector<int>& positions) {
  check_positions(inst.word.size(), positions);
  Word rest;
  const std::set<int> drop(positions.begin(), positions.end());
  for (int p = 0; p < static_cast<int>(inst.word.size()); ++p)
    if (!drop.count(p)) rest.push_back(inst.word[static_cast<size_t>(p)]);
  return contains_reduced(inst.sys, rest, inst.pi, inst.pi_length);
}

bool is_facet(const SubwordInstance& inst, const std::vector<int>& positions) {
  check_positions(inst.word.size(), positions);
  const int r = static_cast<int>(inst.word.size());
  if (static_cast<int>(positions.size()) != r - inst.pi_length) return false;
  Word complement;
  const std::set<int> drop(positions.begin(), positions.end());
  for (int p = 0; p < r; ++p)
    if (!drop.count(p)) complement.push_back(inst.word[static_cast<size_t>(p)]);
  return word_element(inst.sys, complement) == inst.pi && is_reduced(inst.sys, complement);
}

std::vector<IVec> root_function(const SubwordInstance& inst, const std::vector<int>& facet) {
  check_positions(inst.word.size(), facet);
  const std::set<int> in_facet(facet.begin(), facet.end());
  std::vector<IVec> roots;
  roots.reserve(inst.word.size());
  IMat prefix = identity_element(inst.sys);
  for (int p = 0; p < static_cast<int>(inst.word.size()); ++p) {
    const int letter = inst.word[static_cast<size_t>(p)];
    IVec root = prefix.col(letter);
    root_sign(root);
    roots.push_back(std::move(root));
    if (!in_facet.count(p)) prefix = prefix * generator(inst.sys, letter);
  }
  return roots;
}

std::optional<FlipResult> flip(const SubwordInstance& inst, const std::vector<int>& facet,
                               int position) {
  if (!std::binary_search(facet.begin(), facet.end(), position))
    throw std::invalid_argument("flip position is not in the facet");
  const std::vector<IVec> roots = root_function(inst, facet);
  const IVec& target = roots[static_cast<size_t>(position)];
  const std::set<int> in_facet(facet.begin(), facet.end());
  int partner = -1;
  for (int p = 0; p < static_cast<int>(roots.size()); ++p) {
    if (in_facet.count(p)) continue;
    if (roots[static_cast<size_t>(p)] == target || roots[static_cast<size_t>(p)] == IVec(-target)) {
      if (partner >= 0) throw std::logic_error("flip partner is not unique");
      partner = p;
    }
  }
  if (partner < 0) return std::nullopt;
  // sign rule from the flip lemma
  const IVec& partner_root = roots[static_cast<size_t>(partner)];
  if (position < partner ? partner_root != target : partner_root != IVec(-target))
    throw std::logic_error("flip sign rule violated");
  FlipResult result;
  result.from = position;
  result.to = partner;
  for (const int p : facet)
    if (p != position) result.facet.push_back(p);
  result.facet.push_back(partner);
  std::sort(result.facet.begin(), result.facet.end());
  if (!is_facet(inst, result.facet)) throw std::logic_error("flip produced a non-facet");
  // reflection update rule: recompute and compare
  const IMat s = reflection(inst.sys, target);
  const std::vector<IVec> updated = root_function(inst, result.facet);
  const int lo = std::min(position, partner), hi = std::max(position, partner);
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    const IVec expected = (lo < k && k <= hi) ? IVec(s * roots[static_cast<size_t>(k)])
                                              : roots[static_cast<size_t>(k)];
    if (updated[static_cast<size_t>(k)] != expected)
      throw std::logic_error("flip root-function update rule violated");
  }
  return result;
}

bool is_irreducible(const SubwordInstance& inst, const std::vector<int>& facet,
                    bool check_second_facet) {
  auto config_rank = [&](const std::vector<int>& f) {
    const std::vector<IVec> roots = root_function(inst, f);
    QMat rows(static_cast<Eigen::Index>(f.size()), inst.sys.rank);
    for (size_t k = 0; k < f.size(); ++k)
      rows.row(static_cast<Eigen::Index>(k)) = to_rat(roots[static_cast<size_t>(f[k])]).transpose();
    return rank_of(rows);
  };
  const bool full = config_rank(facet) == inst.sys.rank;
  if (check_second_facet) {
    for (const int p : facet) {
      const auto moved = flip(inst, facet, p);
      if (!moved) continue;
      if ((config_rank(moved->facet) == inst.sys.rank) != full)
        throw std::logic_error("irreducibility disagreed across adjacent facets");
      break;
    }
  }
  return full;
}

LinkInstance link_instance(const SubwordInstance& inst, const std::vector<int>& deleted) {
  if (!is_face(inst, deleted)) throw std::invalid_argument("link of a non-face");
  LinkInstance link;
  const std::set<int> drop(deleted.begin(), deleted.end());
  Word rest;
  link.new_of_old.assign(inst.word.size(), -1);
  for (int p = 0; p < static_cast<int>(inst.word.size()); ++p) {
    if (drop.count(p)) continue;
    link.new_of_old[static_cast<size_t>(p)] = static_cast<int>(rest.size());
    link.old_of_new.push_back(p);
    rest.push_back(inst.word[static_cast<size_t>(p)]);
  }
  link.instance = make_instance(inst.sys, std::move(rest), inst.pi);
  return link;
}

}  // namespace swc
