// logmodkit <command> [--oracle] [--batch] [--out <path>] [--dot <path>] [input] < input.json

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "logmod/commands.hpp"
#include "logmod/error.hpp"

using namespace logmod;

namespace {

std::string read_all(std::istream& in)
{
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void report_oracle(const io::CommandResult& r, std::size_t line)
{
  const char* what = nullptr;
  switch (r.oracle) {
  case io::OracleStatus::Agree:
    what = "agree";
    break;
  case io::OracleStatus::NotApplicable:
    what = "not applicable";
    break;
  case io::OracleStatus::NotRequested:
    return;
  }
  std::cerr << "oracle";
  if (line)
    std::cerr << " [" << line << "]";
  std::cerr << ": " << what << "\n";
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Combinatorial log-geometry toolkit: monoids, blow-ups, valuations, fans"};
  std::string command;
  std::string input_path;
  std::string out_path;
  std::string dot_path;
  bool oracle = false;
  bool batch = false;
  bool serial = false;

  std::string names;
  for (const auto& n : io::command_names())
    names += (names.empty() ? "" : ", ") + n;

  app.add_option("command", command, "one of: " + names)->required();
  app.add_option("input", input_path, "input file (default: standard input)");
  app.add_flag("--oracle", oracle, "cross-check against the brute-force oracle");
  app.add_flag("--batch", batch, "one document per line, results in the same order");
  app.add_flag("--serial", serial, "disable OpenMP in --batch and the parallel kernels");
  app.add_option("--out", out_path, "write results here instead of standard output");
  app.add_option("--dot", dot_path, "write a DOT graph (blowup, zrstage, posetdim)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string input;
  if (input_path.empty()) {
    input = read_all(std::cin);
  } else {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot open " << input_path << "\n";
      return 2;
    }
    input = read_all(in);
  }

  io::CommandOptions opts;
  opts.oracle = oracle;
  opts.want_dot = !dot_path.empty() && !batch;
  opts.parallel = !serial;

  std::ostringstream out;
  int code = 0;
  if (batch) {
    auto results = io::run_batch(command, input, opts);
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << results[i].output.dump() << "\n";
      code = std::max(code, results[i].exit_code);
      report_oracle(results[i], i + 1);
    }
  } else {
    auto r = io::run_command(command, std::string_view(input), opts);
    out << r.output.dump() << "\n";
    code = r.exit_code;
    report_oracle(r, 0);
    if (r.dot) {
      std::ofstream dot(dot_path);
      dot << *r.dot;
    }
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    f << out.str();
  }
  return code;
}
