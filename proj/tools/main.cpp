#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cid/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "cid: complete ideals of a two-dimensional regular local ring via "
      "antinef divisors on point-blowup clusters"};
  app.allow_extras();

  std::string input = "-";
  bool verbose = false;
  app.add_option("-i,--input", input, "input document (default: stdin)");
  app.add_flag("--verbose", verbose, "add derivation trace comments");

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> cmd = app.remaining();
  if (cmd.empty()) {
    std::cerr << "error no command given\n" << app.help();
    return 1;
  }

  std::string text;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "error cannot open '" << input << "'\n";
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }

  cid::RunResult res = cid::run_on_text(cmd, text, verbose);
  // Verification failures (exit 3) still carry a machine-readable report.
  if (res.exit_code == 0 || res.exit_code == 3)
    std::cout << res.report;
  else
    std::cerr << res.report;
  return res.exit_code;
}
