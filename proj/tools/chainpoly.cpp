#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "chainpoly/cli.hpp"
#include "chainpoly/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFalsified = 2;

int run_analyze(const std::string& file, bool oracle, bool decompose, const std::string& format,
                bool force) {
  chainpoly::AnalyzeOptions opts;
  opts.oracle = oracle;
  opts.decompose = decompose;
  if (force) {
    opts.lattice_limit = chainpoly::kIdealGroundHardLimit;
    std::cerr << "warning: size gates lifted by --force\n";
  }
  const chainpoly::Poset p = chainpoly::load_poset_file(file);
  const chainpoly::AnalysisDocument doc = chainpoly::analyze_poset(p, opts);
  if (format == "json")
    std::cout << chainpoly::to_json(doc).dump(2) << '\n';
  else
    std::cout << chainpoly::render_text(doc);
  return doc.falsification ? kExitFalsified : kExitOk;
}

int run_enumerate(int n, const std::string& out_path, const std::string& format) {
  const std::vector<chainpoly::Poset> posets = chainpoly::enumerate_posets(n);
  std::string payload;
  if (format == "json") {
    chainpoly::json j;
    j["n_requested"] = n;
    j["count"] = posets.size();
    j["posets"] = chainpoly::json::array();
    for (const auto& p : posets) j["posets"].push_back(chainpoly::poset_to_json(p));
    payload = j.dump(2) + "\n";
  } else {
    for (std::size_t i = 0; i < posets.size(); ++i) {
      if (i) payload += "\n";
      payload += chainpoly::poset_to_text(posets[i]);
    }
  }
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) throw chainpoly::Error("cannot write '" + out_path + "'");
    out << payload;
  }
  std::cerr << posets.size() << " isomorphism classes\n";
  return kExitOk;
}

int run_verify(int n_max, int jobs, const std::string& format, bool force) {
  if (force) std::cerr << "warning: size gates lifted by --force\n";
  const chainpoly::BatchReport rep = chainpoly::batch_verify(n_max, jobs, force);
  if (format == "json")
    std::cout << chainpoly::to_json(rep).dump(2) << '\n';
  else
    std::cout << chainpoly::render_text(rep);
  return rep.clean() ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chain-polynomial analysis of distributive lattices J(P)"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* analyze = app.add_subcommand("analyze", "analyze a single poset file");
  std::string analyze_file;
  bool oracle = false, decompose = false, analyze_force = false;
  analyze->add_option("file", analyze_file, "poset file (text or structured)")->required();
  analyze->add_flag("--oracle", oracle, "cross-check against explicit face enumeration");
  analyze->add_flag("--decompose", decompose, "print the binomial-basis decomposition of h");
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--force", analyze_force, "lift size gates (with a warning)");

  auto* enumerate = app.add_subcommand("enumerate", "list poset isomorphism classes");
  int enum_n = 0;
  std::string enum_out;
  enumerate->add_option("--n", enum_n, "element count")->required();
  enumerate->add_option("--out", enum_out, "output file (default: stdout)");
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "exhaustive verification over all classes up to n-max");
  int n_max = 5, jobs = 1;
  bool verify_force = false;
  verify->add_option("--n-max", n_max, "largest ground-poset size (gate: 7)");
  verify->add_option("--jobs", jobs, "worker threads; 0 = all cores");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--force", verify_force, "lift size gates (with a warning)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(analyze_file, oracle, decompose, format, analyze_force);
    if (app.got_subcommand(enumerate)) return run_enumerate(enum_n, enum_out, format);
    if (app.got_subcommand(verify)) return run_verify(n_max, jobs, format, verify_force);
  } catch (const chainpoly::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const chainpoly::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
