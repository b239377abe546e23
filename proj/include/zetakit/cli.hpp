#pragma once

#include <cstdint>
#include <iosfwd>

namespace zetakit::cli {

enum class OutputFormat { text, csv, json };

struct RunConfig {
  double tol = 1e-14;
  std::size_t K = 6;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Exit codes: 0 success, 1 domain or precondition error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetakit::cli
