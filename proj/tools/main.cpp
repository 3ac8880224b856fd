#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  std::string message;
  auto config = qps::cli::parse_arguments(argc, argv, code, message);
  if (!config) {
    (code == 0 ? std::cout : std::cerr) << message << (message.ends_with('\n') ? "" : "\n");
    return code;
  }
  auto result = qps::cli::run(*config);
  std::cout << qps::cli::render(result.report, config->format);
  if (!result.error.empty()) std::cerr << "error: " << result.error << '\n';
  return result.exit_code;
}
