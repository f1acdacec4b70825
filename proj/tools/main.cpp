#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rescalc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rescalc: residue-current algebra from a script"};
  std::string script_path;
  std::string json_path;
  bool corpus = false;
  int cap = rescalc::kDefaultResolutionCap;
  std::string order = "grevlex";
  app.add_option("--script", script_path, "Script file to run");
  app.add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  app.add_flag("--corpus", corpus, "Run the bundled example corpus");
  app.add_option("--cap", cap, "Default resolution length cap")->check(CLI::PositiveNumber);
  app.add_option("--order", order, "Monomial order")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  CLI11_PARSE(app, argc, argv);

  if (corpus == !script_path.empty()) {
    std::cerr << "give exactly one of --script or --corpus\n";
    return 2;
  }
  std::string source;
  if (corpus) {
    source = rescalc::cli::corpus_script();
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "cannot read " << script_path << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  }

  rescalc::cli::Options options;
  options.cap = cap;
  options.order = rescalc::MonomialOrder{rescalc::order_from_name(order), {}};
  rescalc::cli::Report report = rescalc::cli::run_script(source, options);

  std::cout << report.text();
  if (!json_path.empty()) {
    std::string dump = report.json().dump(2) + "\n";
    if (json_path == "-") {
      std::cout << dump;
    } else {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "cannot write " << json_path << "\n";
        return 1;
      }
      out << dump;
    }
  }
  return report.exit_status;
}
