#include "polyenum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyenum/cache.hpp"
#include "polyenum/classify.hpp"
#include "polyenum/enumerate.hpp"
#include "polyenum/error.hpp"
#include "polyenum/gf.hpp"
#include "polyenum/json_io.hpp"
#include "polyenum/patterns.hpp"
#include "polyenum/permutation.hpp"
#include "polyenum/trees.hpp"

namespace polyenum {

namespace {

using MatrixFilter = std::function<bool(const BinaryMatrix&)>;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string_view> splitLines(const std::string& payload) {
  std::vector<std::string_view> lines;
  std::string_view rest = payload;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    lines.push_back(rest.substr(0, nl));
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  return lines;
}

void requireAtLeast(int value, int lo, const char* flag) {
  if (value < lo) throw Error(Errc::InvalidArgument, std::string(flag) + " must be at least " + std::to_string(lo));
}

// ---------------------------------------------------------------------------
// Enumeration streams: one JSON record per line, in canonical order.

std::string polyominoStream(EnumerationLimit limit) {
  std::string s;
  forEachPolyomino(limit, [&](const Polyomino& p) {
    s += matrixToJson(p.matrix()).dump();
    s += '\n';
  });
  return s;
}

std::string permutationStream(int n) {
  std::string s;
  forEachPermutation(n, [&](const Permutation& p) {
    s += nlohmann::json{{"perm", p.values()}}.dump();
    s += '\n';
  });
  return s;
}

BinaryMatrix recordMatrix(std::string_view line, bool perms) {
  const auto j = nlohmann::json::parse(line);
  if (perms) return permToMatrix(Permutation(j.at("perm").get<std::vector<int>>()));
  return matrixFromJson(j);
}

class StreamSource {
 public:
  StreamSource(const std::string& cacheDir, std::ostream& err) : err_(err) {
    if (!cacheDir.empty()) cache_.emplace(cacheDir);
  }

  std::string get(const std::string& kind, int bound, const std::function<std::string()>& generate) {
    if (!cache_) return generate();
    EnumerationCache::Outcome outcome;
    std::string payload = cache_->loadOrGenerate(kind, bound, generate, &outcome);
    if (outcome == EnumerationCache::Outcome::Regenerated)
      err_ << "warning: corrupt cache file " << cache_->pathFor(kind, bound).string() << " regenerated\n";
    return payload;
  }

  std::string polyominoesBySp(int sp) {
    return get("polyominoes-sp", sp, [sp] { return polyominoStream(EnumerationLimit::bySemiPerimeter(sp)); });
  }
  std::string polyominoesByArea(int a) {
    return get("polyominoes-area", a, [a] { return polyominoStream(EnumerationLimit::byArea(a)); });
  }
  std::string permutations(int n) {
    return get("permutations", n, [n] { return permutationStream(n); });
  }

 private:
  std::ostream& err_;
  std::optional<EnumerationCache> cache_;
};

// Keeps the lines whose record passes the filter. Work is split into
// contiguous chunks and merged in order, so the result does not depend on jobs.
std::vector<std::string_view> filterLines(const std::vector<std::string_view>& lines, bool perms,
                                          const MatrixFilter& keep, int jobs) {
  if (!keep) return lines;
  const int workers = static_cast<int>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(lines.size(), 1)));
  std::vector<char> flags(lines.size(), 0);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      const std::size_t lo = lines.size() * w / workers;
      const std::size_t hi = lines.size() * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) flags[i] = keep(recordMatrix(lines[i], perms));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<std::string_view> kept;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (flags[i]) kept.push_back(lines[i]);
  return kept;
}

MatrixFilter avoidFilter(const std::string& path) {
  const std::vector<GenPattern> patterns = parsePatternFile(readFile(path));
  std::vector<BinaryMatrix> plain;
  for (const auto& g : patterns) {
    if (auto m = plainMatrix(g)) plain.push_back(*m);
  }
  if (plain.size() == patterns.size())
    return [plain](const BinaryMatrix& m) { return !containsAnySubmatrix(m, plain); };
  return [patterns](const BinaryMatrix& m) {
    return std::none_of(patterns.begin(), patterns.end(), [&](const GenPattern& g) { return genPatternMatch(m, g); });
  };
}

MatrixFilter combine(MatrixFilter a, MatrixFilter b) {
  if (!a) return b;
  if (!b) return a;
  return [a, b](const BinaryMatrix& m) { return a(m) && b(m); };
}

MatrixFilter polyominoFilter(const RunConfig& cfg) {
  MatrixFilter f;
  if (!cfg.family.empty()) {
    const FamilyTag tag = FamilyTag::parse(cfg.family);
    f = [tag](const BinaryMatrix& m) { return belongsTo(Polyomino::trusted(m), tag); };
  }
  if (!cfg.avoidPath.empty()) f = combine(f, avoidFilter(cfg.avoidPath));
  return f;
}

// ---------------------------------------------------------------------------
// Commands

int cmdEnumerate(const RunConfig& cfg, StreamSource& src, std::ostream& out) {
  std::string payload;
  MatrixFilter keep;
  if (cfg.perms) {
    if (!cfg.n || cfg.sp || cfg.area) throw Error(Errc::InvalidArgument, "--perms takes --n only");
    if (!cfg.family.empty()) throw Error(Errc::InvalidArgument, "--family applies to polyominoes");
    requireAtLeast(*cfg.n, 1, "--n");
    payload = src.permutations(*cfg.n);
    if (!cfg.avoidPath.empty()) keep = avoidFilter(cfg.avoidPath);
  } else {
    if (cfg.n || cfg.sp.has_value() == cfg.area.has_value())
      throw Error(Errc::InvalidArgument, "--polyominoes takes exactly one of --sp and --area");
    if (cfg.sp) {
      requireAtLeast(*cfg.sp, 2, "--sp");
      payload = src.polyominoesBySp(*cfg.sp);
    } else {
      requireAtLeast(*cfg.area, 1, "--area");
      payload = src.polyominoesByArea(*cfg.area);
    }
    keep = polyominoFilter(cfg);
  }
  for (std::string_view line : filterLines(splitLines(payload), cfg.perms, keep, cfg.jobs)) out << line << '\n';
  return kExitOk;
}

std::vector<BigInt> crosscheckCounts(const std::string& name, int spMax) {
  if (name == "catalan") {
    // C_{n-1} at semi-perimeter n.
    std::vector<BigInt> c(spMax + 1, 0);
    BigInt cat = 1;
    for (int m = 0; m + 1 <= spMax; ++m) {
      c[m + 1] = cat;
      cat = cat * 2 * (2 * m + 1) / (m + 2);
    }
    c[0] = 0;
    c[1] = 0;
    return c;
  }
  return familySeries(name, spMax).integerCoefficients();
}

int cmdCount(const RunConfig& cfg, StreamSource& src, std::ostream& out) {
  requireAtLeast(cfg.spMax, 2, "--sp-max");
  const MatrixFilter keep = polyominoFilter(cfg);
  std::vector<BigInt> expected;
  if (!cfg.crosscheck.empty()) expected = crosscheckCounts(cfg.crosscheck, cfg.spMax);
  out << (expected.empty() ? "n,count\n" : "n,count,match\n");
  bool mismatch = false;
  for (int sp = 2; sp <= cfg.spMax; ++sp) {
    const std::size_t count = filterLines(splitLines(src.polyominoesBySp(sp)), false, keep, cfg.jobs).size();
    out << sp << ',' << count;
    if (!expected.empty()) {
      const bool ok = expected[sp] == count;
      mismatch = mismatch || !ok;
      out << ',' << (ok ? "match" : "mismatch");
    }
    out << '\n';
  }
  return mismatch ? kExitCrosscheckMismatch : kExitOk;
}

int cmdSeries(const RunConfig& cfg, std::ostream& out) {
  requireAtLeast(cfg.terms, 1, "--terms");
  Series s = Series::constant(0, 0);
  if (cfg.gf == "kparallelogram") {
    if (!cfg.k) throw Error(Errc::InvalidArgument, "--gf kparallelogram needs --k");
    requireAtLeast(*cfg.k, 0, "--k");
    s = cfg.exactDegree ? gfExactDegree(*cfg.k, cfg.terms) : gfKParallelogram(*cfg.k, cfg.terms);
  } else {
    if (cfg.k || cfg.exactDegree) throw Error(Errc::InvalidArgument, "--k and --exact-degree need --gf kparallelogram");
    s = familySeries(cfg.gf, cfg.terms);
  }
  out << "n,numerator,denominator\n" << s.toCsv();
  return kExitOk;
}

struct CheckOutcome {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<BinaryMatrix> counterexample;
  std::string note;
};

CheckOutcome treeBijectionCheck(int spMax) {
  CheckOutcome r;
  forEachPolyominoUpTo(spMax, [&](const Polyomino& p) {
    if (!r.pass || !isParallelogram(p)) return;
    ++r.checked;
    const PlantedPlaneTree t = toTree(p);
    std::string failure;
    if (!(fromTree(t) == p))
      failure = "round trip differs";
    else if (t.nodeCount() != p.semiPerimeter())
      failure = "node count differs from semi-perimeter";
    else if (treeHeight(t) > convexityDegree(p) + 3)
      failure = "height above degree + 3";
    if (!failure.empty()) {
      r.pass = false;
      r.counterexample = p.matrix();
      r.note = failure + ", tree " + t.toParens();
    }
  });
  return r;
}

int cmdVerify(const RunConfig& cfg, std::ostream& out) {
  const bool byDim = cfg.check == "ryser";
  if ((byDim ? cfg.spMax : cfg.maxDim) != 0)
    throw Error(Errc::InvalidArgument, "ryser takes --max-dim, other checks take --sp-max");
  const int bound = byDim ? cfg.maxDim : cfg.spMax;
  requireAtLeast(bound, 1, byDim ? "--max-dim" : "--sp-max");

  CheckOutcome r;
  if (cfg.check == "tree-bijection") {
    r = treeBijectionCheck(bound);
  } else {
    const Characterization c =
        cfg.check == "two-convex-genpatterns" ? Characterization::TwoConvex : parseCharacterization(cfg.check);
    if (c == Characterization::Ryser && !byDim) throw Error(Errc::InvalidArgument, "unknown check " + cfg.check);
    const CharacterizationReport rep = verifyCharacterization(c, bound);
    r.pass = rep.holds;
    r.checked = rep.checked;
    r.counterexample = rep.counterexample;
  }

  out << cfg.check << " bound=" << bound << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checked
      << " checked)\n";
  if (r.counterexample) out << "counterexample:\n" << r.counterexample->toText() << '\n';
  if (!r.note.empty()) out << r.note << '\n';
  nlohmann::json j{{"check", cfg.check}, {"bound", bound}, {"pass", r.pass}, {"checked", r.checked}};
  j["counterexample"] = r.counterexample ? matrixToJson(*r.counterexample) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  out << j.dump() << '\n';
  return r.pass ? kExitOk : kExitCheckFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  StreamSource src(cfg.cacheDir, err);
  if (cfg.command == "enumerate") return cmdEnumerate(cfg, src, out);
  if (cfg.command == "count") return cmdCount(cfg, src, out);
  if (cfg.command == "series") return cmdSeries(cfg, out);
  return cmdVerify(cfg, out);
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Enumeration of polyominoes and permutations by pattern avoidance"};
  app.name("polyenum");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", cfg.outputPath, "Write the result to a file instead of stdout");
  app.add_option("--cache-dir", cfg.cacheDir, "Enumeration cache directory (default: $POLYENUM_CACHE)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for filtering")->check(CLI::Range(1, 256));

  auto* en = app.add_subcommand("enumerate", "Write polyominoes or permutations as JSON lines");
  auto* polys = en->add_flag("--polyominoes", "Polyominoes (default)");
  en->add_flag("--perms", cfg.perms, "Permutations")->excludes(polys);
  en->add_option("--sp", cfg.sp, "Semi-perimeter");
  en->add_option("--area", cfg.area, "Area");
  en->add_option("--n", cfg.n, "Permutation size");
  en->add_option("--family", cfg.family, "Polyomino family, e.g. convex or k-convex:2");
  en->add_option("--avoid", cfg.avoidPath, "Pattern file; keep the objects avoiding every pattern");

  auto* ct = app.add_subcommand("count", "Count polyominoes by semi-perimeter as CSV");
  ct->add_option("--family", cfg.family, "Polyomino family");
  ct->add_option("--sp-max", cfg.spMax, "Largest semi-perimeter")->required();
  ct->add_option("--crosscheck", cfg.crosscheck, "catalan or a series name; adds a match column");
  ct->add_option("--avoid", cfg.avoidPath, "Pattern file");

  auto* se = app.add_subcommand("series", "Generating function coefficients as CSV");
  se->add_option("--gf", cfg.gf, "kparallelogram or a family series name")->required();
  se->add_option("--k", cfg.k, "Convexity degree for kparallelogram");
  se->add_option("--terms", cfg.terms, "Truncation order")->required();
  se->add_flag("--exact-degree", cfg.exactDegree, "Degree exactly k instead of at most k");

  auto* ve = app.add_subcommand("verify", "Run a named exhaustive check");
  ve->add_option("check", cfg.check, "ryser, tree-bijection, two-convex-genpatterns or a characterization name")
      ->required();
  ve->add_option("--max-dim", cfg.maxDim, "Largest matrix dimension (ryser)");
  ve->add_option("--sp-max", cfg.spMax, "Largest semi-perimeter");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.cacheDir.empty()) {
    if (const char* env = std::getenv("POLYENUM_CACHE")) cfg.cacheDir = env;
  }

  try {
    if (cfg.outputPath.empty()) return dispatch(cfg, out, err);
    std::ofstream file(cfg.outputPath, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::InvalidArgument, "cannot write " + cfg.outputPath);
    const int code = dispatch(cfg, file, err);
    file.flush();
    if (!file) throw Error(Errc::InvalidArgument, "cannot write " + cfg.outputPath);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::CapExceeded: return kExitCapExceeded;
      case Errc::IdentityFailed: return kExitCheckFailed;
      default: return kExitInvalidArgs;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  }
}

}  // namespace polyenum
