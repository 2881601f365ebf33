#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "subword/fixtures.hpp"
#include "subword/json_io.hpp"
#include "subword/verify.hpp"

namespace {

using namespace swc;

Word parse_letters(const std::string& csv) {
  Word out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 1) throw CLI::ValidationError("letters and positions are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

std::vector<int> parse_positions(const std::string& csv, size_t limit) {
  const Word raw = parse_letters(csv);
  std::vector<int> out(raw.begin(), raw.end());
  for (const int v : out)
    if (v < 0 || v >= static_cast<int>(limit))
      throw CLI::ValidationError("position out of range");
  std::sort(out.begin(), out.end());
  return out;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

struct InstanceArgs {
  std::string file;
  std::string type;
  std::string word;
  std::string pi;

  void attach(CLI::App* cmd, bool pi_required = true) {
    cmd->add_option("-f,--file", file, "instance JSON file");
    cmd->add_option("--type", type, "named system (A2, B3, D4, tA1, tA2)");
    cmd->add_option("--word", word, "comma-separated 1-based letters of Q");
    cmd->add_option("--pi", pi, pi_required ? "word for pi" : "word for pi (default empty)");
  }

  SubwordInstance build() const {
    if (!file.empty()) return instance_from_json(load_json(file));
    if (type.empty() || word.empty())
      throw CLI::ValidationError("need --file or --type with --word");
    return make_instance(build_system(coxeter_matrix_of_type(type)), parse_letters(word),
                         parse_letters(pi));
  }
};

std::string facet_text(const std::vector<int>& facet) {
  std::string out = "{";
  for (size_t i = 0; i < facet.size(); ++i)
    out += (i ? "," : "") + std::to_string(facet[i] + 1);
  return out + "}";
}

void emit(const ordered_json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

int run_verify(const std::string& suite, const std::string& type, const std::string& c_csv,
               int count, int len, unsigned seed) {
  SuiteResult result;
  if (suite == "hopf") {
    result = verify_hopf_suite(fixtures::corpus());
  } else if (suite == "decomposition") {
    result = verify_decomposition_suite(
        {fixtures::a2(), fixtures::a3_assoc(), fixtures::a3k2(), fixtures::affine_a2()});
  } else if (suite == "cluster-flat") {
    const std::string name = type.empty() ? "A3" : type;
    const CoxeterSystem sys = build_system(coxeter_matrix_of_type(name));
    Word c = c_csv.empty() ? Word{} : parse_letters(c_csv);
    if (c.empty())
      for (int i = 0; i < sys.rank; ++i) c.push_back(i);
    result = verify_cluster_flat_suite(cluster_instance(sys, c));
  } else if (suite == "appendixA") {
    result = verify_appendix_a_suite(count, len, seed);
  } else if (suite == "antipode-agreement") {
    result = verify_antipode_agreement_suite(fixtures::corpus());
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  if (result.pass) {
    std::cout << suite << ": PASS (" << result.checks << " checks)\n";
    return 0;
  }
  std::cout << suite << ": FAIL after " << result.checks
            << " checks; first counterexample: " << result.first_failure << "\n";
  return 1;
}

void write_corpus(const std::string& dir) {
  auto dump = [&](const std::string& name, const ordered_json& j) {
    const std::string path = dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot write " + path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
  };
  {
    ordered_json j;
    j["instance"] = instance_to_json(fixtures::a2());
    ordered_json facets = ordered_json::array();
    for (const auto& f : fixtures::a2_expected_facets()) facets.push_back(positions_to_json(f));
    j["expected_facets"] = facets;
    dump("a2.json", j);
  }
  {
    ordered_json j;
    j["instance"] = instance_to_json(fixtures::a3_assoc());
    j["featured_facet"] = positions_to_json({2, 3, 4});
    j["expected_facet_count"] = 14;
    dump("a3-associahedron.json", j);
  }
  {
    ordered_json j;
    j["instance"] = instance_to_json(fixtures::a3k2());
    j["featured_facet"] = positions_to_json(fixtures::a3k2_featured_facet());
    j["expected_root_function"] = roots_to_json(fixtures::a3k2_expected_root_function());
    j["flat"] = positions_to_json(fixtures::a3k2_flat_positions());
    j["expected_beta"] = roots_to_json(fixtures::a3k2_expected_beta());
    j["expected_restricted_facet"] = positions_to_json({0, 1, 4, 5});
    j["flip"] = {{"from", 3}, {"to", 11}};
    dump("a3k2.json", j);
  }
  {
    const SubwordInstance inst = fixtures::affine_a2();
    ordered_json j;
    j["instance"] = instance_to_json(inst);
    j["featured_facet"] = positions_to_json(fixtures::affine_a2_featured_facet());
    j["expected_root_function"] = roots_to_json(fixtures::affine_a2_expected_root_function());
    j["flat"] = positions_to_json(fixtures::affine_a2_flat_positions());
    j["expected_beta"] = roots_to_json(fixtures::affine_a2_expected_beta());
    ordered_json restricted = ordered_json::array();
    restricted.push_back(positions_to_json({0, 1}));
    restricted.push_back(positions_to_json({1, 2}));
    restricted.push_back(positions_to_json({2, 3}));
    j["expected_restricted_facets"] = restricted;
    ordered_json link = ordered_json::array();
    link.push_back(positions_to_json({1, 2}));
    link.push_back(positions_to_json({2, 4}));
    link.push_back(positions_to_json({4, 5}));
    j["expected_link_of_4_facets"] = link;
    // the paper's prose says 6 facets but lists 7; enumeration settles it
    j["facet_count"] = enumerate_facets(inst).facets.size();
    dump("affine-a2.json", j);
  }
  {
    ordered_json j;
    j["instance"] =
        instance_to_json(make_instance(build_system(coxeter_matrix_of_type("A1")), {}, Word{}));
    ordered_json facets = ordered_json::array();
    facets.push_back(ordered_json::array());
    j["expected_facets"] = facets;
    dump("empty.json", j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subword complexes and their Hopf algebra"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  InstanceArgs facets_args, rootfn_args, flip_args, flats_args, restrict_args, rotate_args,
      coproduct_args, antipode_args, chip_args;
  std::string facet_csv, flat_csv, span_arg, method = "both", c_csv, cluster_type;
  std::string product_left, product_right, out_dir, verify_type, verify_c;
  int flip_position = 0, max_iter = 10, sample_count = 200, sample_len = 10;
  unsigned seed = 20240801;
  bool diagonals = false;
  std::string verify_suite;

  auto* cmd_facets = app.add_subcommand("facets", "enumerate the facets of SC(Q, pi)");
  facets_args.attach(cmd_facets);

  auto* cmd_rootfn = app.add_subcommand("rootfn", "root function for a facet");
  rootfn_args.attach(cmd_rootfn);
  cmd_rootfn->add_option("--facet", facet_csv, "1-based facet positions")->required();

  auto* cmd_flip = app.add_subcommand("flip", "flip a facet position");
  flip_args.attach(cmd_flip);
  cmd_flip->add_option("--facet", facet_csv, "1-based facet positions")->required();
  cmd_flip->add_option("--position", flip_position, "1-based position to flip")->required();

  auto* cmd_flats = app.add_subcommand("flats", "all flats of the root list");
  flats_args.attach(cmd_flats);
  cmd_flats->add_option("--facet", facet_csv, "1-based facet positions")->required();

  auto* cmd_restrict = app.add_subcommand(
      "restrict", "restrict to a flat (with --facet/--flat) or restrict the inversion "
                  "list of Q to a subspace (with --span)");
  restrict_args.attach(cmd_restrict, false);
  cmd_restrict->add_option("--facet", facet_csv, "1-based facet positions");
  cmd_restrict->add_option("--flat", flat_csv, "1-based flat positions J");
  cmd_restrict->add_option("--span", span_arg,
                           "semicolon-separated coordinate vectors spanning the subspace, "
                           "e.g. 1,0,0;0,1,0");

  auto* cmd_coproduct = app.add_subcommand("coproduct", "coproduct of a basis key");
  coproduct_args.attach(cmd_coproduct, false);
  cmd_coproduct->add_option("--facet", facet_csv, "1-based facet positions")->required();

  auto* cmd_antipode = app.add_subcommand("antipode", "antipode of a basis key");
  antipode_args.attach(cmd_antipode, false);
  cmd_antipode->add_option("--facet", facet_csv, "1-based facet positions")->required();
  cmd_antipode->add_option("--method", method, "takeuchi, cancelfree, or both")
      ->check(CLI::IsMember({"takeuchi", "cancelfree", "both"}));

  auto* cmd_product = app.add_subcommand("product", "product of two Hopf vectors");
  cmd_product->add_option("left", product_left, "JSON file: Hopf vector or key")->required();
  cmd_product->add_option("right", product_right, "JSON file: Hopf vector or key")->required();

  auto* cmd_cluster = app.add_subcommand("cluster", "the instance (c w0(c), w0)");
  cmd_cluster->add_option("--type", cluster_type, "finite type name")->required();
  cmd_cluster->add_option("--c", c_csv, "Coxeter element word, 1-based");
  cmd_cluster->add_flag("--diagonals", diagonals, "include the type A diagonal labeling");

  auto* cmd_rotate = app.add_subcommand("rotate", "rotate a word with pi = w0");
  rotate_args.attach(cmd_rotate);
  cmd_rotate->add_option("--facet", facet_csv, "facet to transport");
  cmd_rotate->add_option("--flat", flat_csv, "flat to transport (needs --facet)");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", verify_suite,
                   "hopf, decomposition, cluster-flat, appendixA, antipode-agreement")
      ->required();
  cmd_verify->add_option("--type", verify_type, "system for cluster-flat");
  cmd_verify->add_option("--c", verify_c, "Coxeter element for cluster-flat");
  cmd_verify->add_option("--count", sample_count, "samples for appendixA");
  cmd_verify->add_option("--len", sample_len, "max word length for appendixA");
  cmd_verify->add_option("--seed", seed, "random seed for appendixA");

  auto* cmd_chip = app.add_subcommand("chip", "iterate the top-to-random operator");
  chip_args.attach(cmd_chip, false);
  cmd_chip->add_option("--facet", facet_csv, "1-based facet positions")->required();
  cmd_chip->add_option("--max-iter", max_iter, "iteration cap");

  auto* cmd_corpus = app.add_subcommand("corpus", "write the worked-example fixtures");
  cmd_corpus->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);

    if (cmd_facets->parsed()) {
      const SubwordInstance inst = facets_args.build();
      const FacetEnumeration facets = enumerate_facets(inst);
      if (format == "json") {
        ordered_json j;
        ordered_json list = ordered_json::array();
        for (const auto& f : facets.facets) list.push_back(positions_to_json(f));
        j["facets"] = list;
        j["void"] = facets.void_complex;
        emit(j, format);
      } else {
        if (facets.void_complex) std::cout << "void complex\n";
        for (const auto& f : facets.facets) std::cout << facet_text(f) << "\n";
      }
    } else if (cmd_rootfn->parsed()) {
      const SubwordInstance inst = rootfn_args.build();
      const auto facet = parse_positions(facet_csv, inst.word.size());
      emit(roots_to_json(root_function(inst, facet)), format);
    } else if (cmd_flip->parsed()) {
      const SubwordInstance inst = flip_args.build();
      const auto facet =
          parse_positions(facet_csv, inst.word.size());
      const auto result = flip(inst, facet, flip_position - 1);
      if (!result) {
        std::cout << "non-flippable\n";
        return 1;
      }
      ordered_json j;
      j["facet"] = positions_to_json(result->facet);
      j["from"] = result->from + 1;
      j["to"] = result->to + 1;
      emit(j, format);
    } else if (cmd_flats->parsed()) {
      const SubwordInstance inst = flats_args.build();
      const auto facet =
          parse_positions(facet_csv, inst.word.size());
      const RootList rl = root_list(inst, facet);
      ordered_json j = ordered_json::array();
      for (const Flat& flat : enumerate_flats(rl)) {
        ordered_json f = flat_to_json(flat);
        f["irreducible"] = flat_irreducible(rl, flat);
        j.push_back(f);
      }
      emit(j, format);
    } else if (cmd_restrict->parsed()) {
      const SubwordInstance inst = restrict_args.build();
      if (!span_arg.empty()) {
        std::vector<IVec> spanning;
        std::stringstream ss(span_arg);
        std::string chunk;
        while (std::getline(ss, chunk, ';')) {
          const Word coords = [&] {
            Word raw;
            std::stringstream cs(chunk);
            std::string item;
            while (std::getline(cs, item, ',')) raw.push_back(std::stoi(item));
            return raw;
          }();
          IVec v(inst.sys.rank);
          if (static_cast<int>(coords.size()) != inst.sys.rank)
            throw CLI::ValidationError("span vector has wrong length");
          for (int i = 0; i < inst.sys.rank; ++i) v(i) = coords[static_cast<size_t>(i)];
          spanning.push_back(v);
        }
        QMat rows(static_cast<Eigen::Index>(spanning.size()), inst.sys.rank);
        for (size_t r = 0; r < spanning.size(); ++r)
          rows.row(static_cast<Eigen::Index>(r)) = to_rat(spanning[r]).transpose();
        const RestrictedWord restricted =
            restrict_inversions(inst.sys, inst.word, RootSubsystem::subspace(inst.sys, rows));
        ordered_json j;
        j["kept_positions"] = positions_to_json(restricted.kept);
        j["word"] = word_to_json(restricted.word);
        j["system"] = system_to_json(restricted.system);
        j["simples"] = roots_to_json(restricted.simples);
        emit(j, format);
      } else {
        const auto facet =
            parse_positions(facet_csv, inst.word.size());
        const RootList rl = root_list(inst, facet);
        const Flat flat = flat_at(
            rl, parse_positions(flat_csv, inst.word.size()));
        const RestrictedTuple t = restrict_to_flat(rl, flat);
        ordered_json j = restricted_tuple_to_json(t);
        const DecompositionReport report = verify_decomposition(rl, flat);
        j["decomposition_theorem"] = report.pass ? "pass" : report.detail;
        emit(j, format);
      }
    } else if (cmd_coproduct->parsed()) {
      const SubwordInstance inst = coproduct_args.build();
      const auto facet =
          parse_positions(facet_csv, inst.word.size());
      emit(tensor_to_json(coproduct(single(canonicalize(inst, facet)))), format);
    } else if (cmd_antipode->parsed()) {
      const SubwordInstance inst = antipode_args.build();
      const auto facet =
          parse_positions(facet_csv, inst.word.size());
      const HopfVector x = single(canonicalize(inst, facet));
      ordered_json j;
      std::optional<HopfVector> takeuchi, direct;
      if (method != "cancelfree") {
        takeuchi = takeuchi_antipode(x);
        j["takeuchi"] = hopf_to_json(*takeuchi);
      }
      if (method != "takeuchi") {
        direct = antipode(x);
        j["cancellation_free"] = hopf_to_json(*direct);
      }
      if (takeuchi && direct) j["agree"] = (*takeuchi == *direct);
      emit(j, format);
      if (takeuchi && direct && !(*takeuchi == *direct)) return 1;
    } else if (cmd_product->parsed()) {
      auto load_vector = [](const std::string& path) {
        const json j = load_json(path);
        if (j.is_array()) return hopf_from_json(j);
        return single(key_from_json(j));
      };
      emit(hopf_to_json(hopf_product(load_vector(product_left), load_vector(product_right))),
           format);
    } else if (cmd_cluster->parsed()) {
      const CoxeterSystem sys = build_system(coxeter_matrix_of_type(cluster_type));
      Word c = c_csv.empty() ? Word{} : parse_letters(c_csv);
      if (c.empty())
        for (int i = 0; i < sys.rank; ++i) c.push_back(i);
      const ClusterInstance cluster = cluster_instance(sys, c);
      ordered_json j;
      j["instance"] = instance_to_json(cluster.instance);
      j["facet_count"] = enumerate_facets(cluster.instance).facets.size();
      if (diagonals) {
        const DiagonalMap map = typeA_diagonal_map(cluster);
        ordered_json d = ordered_json::array();
        for (const auto& [a, b] : map.by_position) d.push_back({a, b});
        j["gon"] = map.gon;
        j["diagonals"] = d;
      }
      emit(j, format);
    } else if (cmd_rotate->parsed()) {
      const SubwordInstance inst = rotate_args.build();
      std::optional<std::vector<int>> facet;
      if (!facet_csv.empty())
        facet = parse_positions(facet_csv, inst.word.size());
      std::optional<Flat> flat;
      if (!flat_csv.empty()) {
        if (!facet) throw CLI::ValidationError("--flat needs --facet");
        const RootList rl = root_list(inst, *facet);
        flat = flat_at(rl,
                       parse_positions(flat_csv, inst.word.size()));
      }
      const RotationResult result = rotate(inst, facet, flat);
      ordered_json j;
      j["instance"] = instance_to_json(result.instance);
      ordered_json map = ordered_json::array();
      for (const int p : result.position_map) map.push_back(p + 1);
      j["position_map"] = map;
      if (result.facet) j["facet"] = positions_to_json(*result.facet);
      if (result.flat) j["flat"] = flat_to_json(*result.flat);
      emit(j, format);
    } else if (cmd_verify->parsed()) {
      return run_verify(verify_suite, verify_type, verify_c, sample_count, sample_len, seed);
    } else if (cmd_chip->parsed()) {
      const SubwordInstance inst = chip_args.build();
      const auto facet =
          parse_positions(facet_csv, inst.word.size());
      const ChipTrajectory trajectory =
          chip_to_gems(single(canonicalize(inst, facet)), max_iter);
      ordered_json j;
      j["stabilized_at"] = trajectory.stabilized_at;
      ordered_json states = ordered_json::array();
      for (const HopfVector& state : trajectory.states) states.push_back(hopf_to_json(state));
      j["states"] = states;
      emit(j, format);
    } else if (cmd_corpus->parsed()) {
      write_corpus(out_dir);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
