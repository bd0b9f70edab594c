#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polyenum {

constexpr int kExitOk = 0;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitCrosscheckMismatch = 4;
constexpr int kExitCheckFailed = 5;

struct RunConfig {
  std::string command;
  bool perms = false;
  std::string family;  // FamilyTag name, empty for every polyomino
  std::optional<int> area;
  std::optional<int> sp;
  std::optional<int> n;
  int spMax = 0;
  std::string gf;
  std::optional<int> k;
  int terms = 0;
  bool exactDegree = false;
  std::string crosscheck;
  std::string check;
  int maxDim = 0;  // verify ryser
  std::string avoidPath;
  std::string outputPath;
  std::string cacheDir;  // --cache-dir, else POLYENUM_CACHE, else no cache
  int jobs = 1;
};

// The polyenum command line. args excludes the program name. Output goes to
// out unless --output is given; diagnostics go to err. Returns the exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyenum
