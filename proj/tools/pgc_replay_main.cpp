// Standalone certificate checker. Links only the exact core, the
// certificate model and the verifier, so a successful build is itself
// evidence that replay needs no enclosure-construction code.

#include <fstream>
#include <iostream>
#include <sstream>

#include "pgc/verify.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: pgc-replay <certificate>\n";
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << argv[1] << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  pgc::VerifyResult result = pgc::verify_text(buffer.str());
  if (result.accepted) {
    std::cout << "accepted\n";
    return 0;
  }
  std::cout << "rejected at " << result.path << ": " << result.reason << "\n";
  return 1;
}
