// wreath-decide: Identity and Group Problems for finitely generated subsemigroups of Z wr Z.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/decider.hpp"
#include "wreath/error.hpp"

using namespace wreath;

int main(int argc, char** argv) {
  CLI::App app{"Decide the Identity or Group Problem for generators of Z wr Z"};
  std::string problem = "group", format = "json", input;
  bool witness = false, debug = false;
  unsigned bound = 4;
  std::size_t oracle_depth = 0;
  app.add_option("--problem", problem, "identity or group")->check(CLI::IsMember({"identity", "group"}));
  app.add_flag("--witness", witness, "construct and verify a witness word");
  app.add_option("--witness-degree-bound", bound, "degree bound for the witness search");
  app.add_option("--oracle-check", oracle_depth, "cross-check with a breadth-first search up to this length");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--debug", debug, "attach module bases, cells and matrices to the evidence");
  app.add_option("input", input, "generator file (JSON)")->required();
  CLI11_PARSE(app, argc, argv);

  GeneratorSet G;
  try {
    std::ifstream in(input);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + input);
    G = parse_generator_set(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  DeciderOptions opt;
  opt.witness = witness;
  opt.witness_degree_bound = bound;
  opt.debug = debug;
  Verdict v;
  try {
    v = problem == "group" ? decide_group(G, opt) : decide_identity(G, opt);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidInput ? 2 : 3;
  }

  if (oracle_depth > 0) {
    auto o = bfs_oracle(G, oracle_depth);
    if (o.found_word && !v.answer) {
      std::cerr << "oracle inconsistency: a full-image identity word of length " << o.found_word->size()
                << " exists but the verdict is false\n";
      return 3;
    }
  }

  if (format == "json")
    std::cout << to_json(v).dump(2) << '\n';
  else
    std::cout << to_text(v);
  return v.answer ? 0 : 1;
}
