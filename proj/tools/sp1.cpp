#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sp1/errors.hpp"
#include "sp1/scene.hpp"

namespace {

constexpr int kMalformed = 1;
constexpr int kPrecondition = 2;
constexpr int kInconsistent = 3;

struct Flags {
  std::string scene;
  std::string out;
  std::string format = "json";
  bool check = false;
  std::uint64_t seed = 0;
};

int run(const std::string& task, const Flags& flags) {
  try {
    std::ifstream in(flags.scene);
    if (!in) throw sp1::ParseError("cannot read scene file " + flags.scene);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto scene = sp1::io::Json::parse(buf.str());

    sp1::RunOptions options;
    options.format = sp1::parse_format(flags.format);
    options.check = flags.check;
    options.seed = flags.seed;
    const sp1::RunOutput result = sp1::run_scene(scene, task, options);

    if (flags.out.empty()) {
      std::cout << result.text;
    } else {
      std::ofstream out(flags.out, std::ios::binary);
      if (!out) throw sp1::ParseError("cannot write " + flags.out);
      out << result.text;
    }
    if (!result.checks_passed) {
      std::cerr << "error: invariant check failed (see \"checks\")\n";
      return kInconsistent;
    }
    return 0;
  } catch (const sp1::ParseError& e) {
    std::cerr << "error: malformed scene: " << e.what() << "\n";
    return kMalformed;
  } catch (const sp1::io::Json::exception& e) {
    std::cerr << "error: malformed scene: " << e.what() << "\n";
    return kMalformed;
  } catch (const sp1::PreconditionError& e) {
    std::cerr << "error: precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const sp1::InconsistencyError& e) {
    std::cerr << "error: inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeleta, retractions, root valuations and PL flows on the stable completion of P^1"};
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"skeleton", "convex hull tree of a divisor"},
      {"retract", "divisor-stopped retraction of points"},
      {"newton", "root valuations of F(x, y) along an outward path"},
      {"trop", "tropicalization of points under a polynomial tuple"},
      {"flow", "piecewise-linear flow on a cell complex"},
      {"family", "fingerprint sweep over a divisor family"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scene", flags.scene, "scene JSON file")->required();
    sub->add_option("--out", flags.out, "output path (default stdout)");
    sub->add_option("--format", flags.format, "json|dot|svg|csv")
        ->check(CLI::IsMember({"json", "dot", "svg", "csv"}));
    sub->add_flag("--check", flags.check, "run the instance's invariant suite");
    sub->add_option("--seed", flags.seed, "seed for sampled invariants");
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kMalformed;
  }
  return run(chosen, flags);
}
