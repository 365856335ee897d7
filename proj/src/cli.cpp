#include "graphgen/cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI/CLI11.hpp>

#include "graphgen/cache.hpp"
#include "graphgen/errors.hpp"
#include "graphgen/oracle.hpp"
#include "graphgen/record.hpp"
#include "graphgen/recursion.hpp"

namespace graphgen::cli {

namespace {

const std::vector<std::string> kFamilies = {"connected", "biconnected", "simple", "loopless", "loopless-alt"};
const std::vector<std::string> kFormats = {"json", "dot", "text"};

struct Flags {
  std::string family;
  int n = 1;
  int k = 0;
  int legs = 0;
  int min_degree = 0;
  CLI::Option* min_degree_opt = nullptr;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  CLI::Option* cache_opt = nullptr;
  bool no_cache = false;
  int threads = 1;
  int max_edges = 0;
  int max_legs = 0;
  bool sweep = false;
  std::string cache_action;
};

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

// (n, k) with k + n - 1 = m, largest n first.
std::vector<std::pair<int, int>> orders_with_edges(int m) {
  std::vector<std::pair<int, int>> out;
  for (int n = m + 1; n >= 1; --n) out.emplace_back(n, m - n + 1);
  return out;
}

int cmd_gen(const Flags& f, std::ostream& out) {
  GenRequest req{*parse_family(f.family), f.n, f.k, f.legs, std::nullopt};
  if (f.min_degree_opt->count() > 0) req.min_degree = f.min_degree;
  Engine engine(EngineOptions{true, f.threads, {}});
  validate(req, engine.options().limits);

  std::optional<OutputRecord> record;
  std::optional<DiskCache> cache;
  if (!f.no_cache) {
    cache.emplace(resolve_cache_dir(f.cache_opt->count() ? std::optional(f.cache_dir) : std::nullopt));
    record = cache->load(req);
  }
  if (!record) {
    record = make_record(req, engine.generate(req));
    if (cache) cache->store(req, *record);
  }
  emit(render(*record, *parse_format(f.format)), f.out, out);
  return kOk;
}

int cmd_table(const Flags& f, std::ostream& out) {
  const Family family = *parse_family(f.family);
  Engine engine(EngineOptions{true, f.threads, {}});
  if (f.max_edges < 0) throw StructuralError("--max-edges must be >= 0");
  validate(GenRequest{family, 1, f.max_edges, f.legs, std::nullopt}, engine.options().limits);
  std::vector<OutputRecord> blocks;
  for (int m = 0; m <= f.max_edges; ++m) {
    for (const auto& [n, k] : orders_with_edges(m)) {
      const GenRequest req{family, n, k, f.legs, std::nullopt};
      validate(req, engine.options().limits);
      blocks.push_back(make_record(req, engine.generate(req)));
    }
  }
  emit(render_table(blocks, *parse_format(f.format)), f.out, out);
  return kOk;
}

void print_report(const GenRequest& req, const oracle::ClassReport& r, std::ostream& out) {
  out << (r.ok ? "ok   " : "FAIL ") << family_name(req.family) << " n=" << req.n << " k=" << req.k
      << " s=" << req.s << " coefficient=" << format_rational(r.coefficient)
      << " expected=" << format_rational(inverse(Integer(r.symmetry_factor))) << " S=" << r.symmetry_factor;
  if (!r.enumerated) out << " (not in family)";
  if (r.coefficient == 0) out << " (missing)";
  out << " key=" << r.key.hex() << "\n";
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const Family family = *parse_family(f.family);
  Engine engine(EngineOptions{true, f.threads, {}});
  const oracle::OracleLimits limits;
  std::vector<GenRequest> requests;
  if (f.sweep) {
    if (f.max_edges < 0 || f.max_legs < 0) throw StructuralError("--max-edges and --max-legs must be >= 0");
    for (int m = 0; m <= f.max_edges; ++m) {
      for (const auto& [n, k] : orders_with_edges(m)) {
        for (int s = 0; s <= f.max_legs; ++s) requests.push_back(GenRequest{family, n, k, s, std::nullopt});
      }
    }
  } else {
    requests.push_back(GenRequest{family, f.n, f.k, f.legs, std::nullopt});
  }
  std::size_t classes = 0;
  std::size_t failures = 0;
  for (const GenRequest& req : requests) {
    validate(req, engine.options().limits);
    for (const auto& r : oracle::verify(engine, req.family, req.n, req.k, req.s, limits)) {
      print_report(req, r, out);
      ++classes;
      failures += r.ok ? 0 : 1;
    }
  }
  out << requests.size() << " requests, " << classes << " classes, " << failures << " mismatches\n";
  return failures == 0 ? kOk : kMismatch;
}

int cmd_cache(const Flags& f, std::ostream& out) {
  const DiskCache cache(resolve_cache_dir(f.cache_opt->count() ? std::optional(f.cache_dir) : std::nullopt));
  if (f.cache_action == "clear") {
    out << "removed " << cache.clear() << " entries\n";
    return kOk;
  }
  const auto entries = cache.entries();
  out << entries.size() << " entries\n";
  for (const auto& path : entries) out << path.filename().string() << "\n";
  cache.check_all();
  return kOk;
}

void add_family(CLI::App* app, Flags& f) {
  app->add_option("--family", f.family, "Graph family")->required()->check(CLI::IsMember(kFamilies));
}

void add_format_and_out(CLI::App* app, Flags& f) {
  app->add_option("--format", f.format, "Output format")->check(CLI::IsMember(kFormats));
  app->add_option("--out", f.out, "Write to this file instead of stdout");
}

void add_threads(CLI::App* app, Flags& f) {
  app->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate connected multigraphs as weighted sums of isomorphism classes", "graphgen"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* gen = app.add_subcommand("gen", "Generate one (family, n, k, s) sum");
  add_family(gen, f);
  gen->add_option("--n", f.n, "Vertices")->required();
  gen->add_option("--k", f.k, "Cyclomatic number")->required();
  gen->add_option("--legs", f.legs, "Legs x1..xs");
  f.min_degree_opt = gen->add_option("--min-degree", f.min_degree, "Keep graphs with every degree >= this");
  add_format_and_out(gen, f);
  CLI::Option* gen_cache = gen->add_option("--cache", f.cache_dir, "Cache directory");
  gen->add_flag("--no-cache", f.no_cache, "Neither read nor write the cache")->excludes(gen_cache);
  add_threads(gen, f);

  CLI::App* table = app.add_subcommand("table", "All (n, k) blocks with k + n - 1 <= max-edges");
  add_family(table, f);
  table->add_option("--max-edges", f.max_edges, "Largest edge count")->required();
  table->add_option("--legs", f.legs, "Legs x1..xs");
  add_format_and_out(table, f);
  add_threads(table, f);

  CLI::App* verify = app.add_subcommand("verify", "Compare generated sums against exhaustive enumeration");
  add_family(verify, f);
  CLI::Option* n_opt = verify->add_option("--n", f.n, "Vertices");
  CLI::Option* k_opt = verify->add_option("--k", f.k, "Cyclomatic number");
  CLI::Option* legs_opt = verify->add_option("--legs", f.legs, "Legs x1..xs");
  CLI::Option* sweep_opt = verify->add_flag("--sweep", f.sweep, "Every request up to the edge and leg bounds");
  CLI::Option* max_edges_opt = verify->add_option("--max-edges", f.max_edges, "Sweep: largest edge count");
  CLI::Option* max_legs_opt = verify->add_option("--max-legs", f.max_legs, "Sweep: largest leg count");
  sweep_opt->excludes(n_opt)->excludes(k_opt)->excludes(legs_opt);
  max_edges_opt->needs(sweep_opt);
  max_legs_opt->needs(sweep_opt);
  add_threads(verify, f);

  CLI::App* cache = app.add_subcommand("cache", "Inspect or clear the on-disk cache");
  cache->add_option("action", f.cache_action, "info or clear")->required()->check(CLI::IsMember({"info", "clear"}));

  // Shared by gen and cache; CLI11 options belong to one subcommand each.
  f.cache_opt = cache->add_option("--cache", f.cache_dir, "Cache directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (gen->parsed()) {
      f.cache_opt = gen_cache;
      return cmd_gen(f, out);
    }
    if (table->parsed()) return cmd_table(f, out);
    if (verify->parsed()) {
      if (!f.sweep && (n_opt->count() == 0 || k_opt->count() == 0)) {
        err << "error: verify needs --n and --k, or --sweep\n";
        return kInvalid;
      }
      if (f.sweep && max_edges_opt->count() == 0) {
        err << "error: --sweep needs --max-edges\n";
        return kInvalid;
      }
      return cmd_verify(f, out);
    }
    return cmd_cache(f, out);
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const CeilingError& e) {
    err << "error: " << e.what() << "\n";
    return kCeiling;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return kCacheError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace graphgen::cli
