#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "measkit/measkit.h"

namespace {

bool read_all(std::istream& in, std::string& out) {
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return !in.bad();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact measure and integration kernel"};
  app.set_version_flag("--version", mk_version());

  std::string command;
  std::string positional_suite;
  std::string input_path;
  std::string output_path;
  std::string n_max;
  std::string tol;
  std::string suite;
  std::string size;
  std::string decimal;
  bool json = false;

  app.add_option("command", command, "integrate, sigma-gen, measure, tonelli or verify")
      ->required()
      ->check(CLI::IsMember({"integrate", "sigma-gen", "measure", "tonelli", "verify"}));
  app.add_option("suite_name", positional_suite, "suite for verify (same as --suite)");
  app.add_option("--input,-i", input_path, "JSON input file (stdin when omitted)");
  app.add_option("--output,-o", output_path, "write the report to a file");
  app.add_option("--n-max", n_max, "deepest adapted stage");
  app.add_option("--tol", tol, "tolerance p/q");
  app.add_option("--suite", suite, "verification suite");
  app.add_option("--size", size, "universe size for enumeration suites");
  app.add_option("--decimal", decimal, "append a K-digit approximate decimal");
  app.add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!positional_suite.empty()) {
    if (command != "verify") {
      std::cerr << "error: unexpected argument \"" << positional_suite << "\"\n";
      return 2;
    }
    if (!suite.empty() && suite != positional_suite) {
      std::cerr << "error: conflicting suites \"" << positional_suite << "\" and \"" << suite << "\"\n";
      return 2;
    }
    suite = positional_suite;
  }

  std::unique_ptr<mk_context, decltype(&mk_context_free)> ctx(mk_context_new(), mk_context_free);
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return 3;
  }
  const std::pair<const char*, const std::string*> options[] = {
      {"n_max", &n_max}, {"tol", &tol}, {"suite", &suite}, {"size", &size}, {"decimal", &decimal}};
  for (const auto& [key, value] : options) {
    if (value->empty()) continue;
    mk_status s = mk_context_set_option(ctx.get(), key, value->c_str());
    if (s != MK_OK) {
      std::cerr << "error: " << mk_context_last_error(ctx.get()) << "\n";
      return s == MK_PARSE_ERROR ? 2 : 3;
    }
  }

  std::string input;
  if (command != "verify") {
    if (input_path.empty()) {
      read_all(std::cin, input);
    } else {
      std::ifstream file(input_path);
      if (!file || !read_all(file, input)) {
        std::cerr << "error: cannot read input file \"" << input_path << "\"\n";
        return 2;
      }
    }
  }

  mk_result* raw = nullptr;
  mk_status s = mk_run(ctx.get(), command.c_str(), input.c_str(), &raw);
  if (s != MK_OK) {
    std::cerr << "error: " << mk_status_name(s) << ": " << mk_context_last_error(ctx.get()) << "\n";
    return s == MK_PARSE_ERROR ? 2 : 3;
  }
  std::unique_ptr<mk_result, decltype(&mk_result_free)> result(raw, mk_result_free);

  const char* report = json ? mk_result_json(result.get()) : mk_result_text(result.get());
  if (output_path.empty()) {
    std::cout << report;
    std::cout.flush();
  } else {
    std::ofstream file(output_path, std::ios::binary);
    file << report;
    if (!file) {
      std::cerr << "error: cannot write \"" << output_path << "\"\n";
      return 3;
    }
  }
  int code = mk_result_exit_code(result.get());
  if (code != 0) std::cerr << "error: " << mk_result_diagnostic(result.get()) << "\n";
  return code;
}
