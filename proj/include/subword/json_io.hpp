#pragma once

#include <json.hpp>

#include "subword/clusters.hpp"
#include "subword/hopf.hpp"

namespace swc {

using nlohmann::json;
using nlohmann::ordered_json;

// All file formats are 1-based and encode m = infinity as 0.

ordered_json system_to_json(const CoxeterSystem& sys);
CoxeterSystem system_from_json(const json& j);

ordered_json instance_to_json(const SubwordInstance& inst);
SubwordInstance instance_from_json(const json& j);

ordered_json positions_to_json(const std::vector<int>& positions);
std::vector<int> positions_from_json(const json& j, size_t limit);

ordered_json word_to_json(const Word& word);
Word word_from_json(const json& j);

ordered_json root_to_json(const IVec& root);
ordered_json roots_to_json(const std::vector<IVec>& roots);

ordered_json flat_to_json(const Flat& flat);

ordered_json restricted_tuple_to_json(const RestrictedTuple& t);

ordered_json key_to_json(const BasisKey& key);
BasisKey key_from_json(const json& j);

ordered_json hopf_to_json(const HopfVector& v);
HopfVector hopf_from_json(const json& j);

ordered_json tensor_to_json(const Tensor2& t);

/// A reduced word for a group element, via greedy descent.
Word reduced_word_of(const CoxeterSystem& sys, const IMat& g);

}  // namespace swc
