// Command-line front end. Kept in a header so tests can drive it in-process.
#ifndef NAKASEQ_TOOLS_CLI_HPP
#define NAKASEQ_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nakaseq/nakaseq.hpp"

namespace nakaseq::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::optional<std::uint64_t> node_budget_from_env() {
  const char* raw = std::getenv("NAKASEQ_NODE_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t pos = 0;
    const std::string s(raw);
    if (s.find('-') != std::string::npos) throw std::invalid_argument("sign");
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError("NAKASEQ_NODE_BUDGET must be a non-negative integer");
  }
}

inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw UsageError("range must look like a..b, got '" + text + "'");
  }
  try {
    const int lo = nakaseq::detail::parse_int(std::string_view(text).substr(0, dots), "range start");
    const int hi = nakaseq::detail::parse_int(std::string_view(text).substr(dots + 2), "range end");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const SyntaxError& e) {
    throw UsageError(e.what());
  }
}

inline RegionSelection parse_regions(const std::string& text) {
  RegionSelection r{false, false};
  for (auto part : nakaseq::detail::split(text, ',')) {
    part = nakaseq::detail::trim(part);
    if (part == "hom") {
      r.hom = true;
    } else if (part == "ext") {
      r.ext = true;
    } else {
      throw UsageError("unknown region '" + std::string(part) + "' (expected hom, ext)");
    }
  }
  return r;
}

struct EnumerateArgs {
  std::string algebra;
  std::string mode;
  bool full = false;
  std::optional<int> size;
  bool json = false;
  bool csv = false;
  std::optional<std::size_t> witnesses;
};

inline void run_enumerate(const EnumerateArgs& args, bool with_witnesses,
                          unsigned threads, std::ostream& out) {
  const auto alg = parse_algebra_spec(args.algebra);
  const auto mode = parse_mode(args.mode);
  if (!mode) throw UsageError("mode must be weak or standard");
  if (args.size && *args.size < 0) throw UsageError("--size must be non-negative");

  EnumOptions o;
  o.mode = *mode;
  o.fixed_size = args.size;
  o.materialize = with_witnesses;
  o.max_witnesses = args.witnesses;
  o.threads = threads;
  o.node_budget = node_budget_from_env();
  const auto r = enumerate(alg, o);
  const bool full = !args.size;

  if (args.json) {
    out << enumeration_json(alg, *mode, full, r, with_witnesses).dump(2) << '\n';
    return;
  }
  if (args.csv) {
    out << "algebra,mode,size,count\n"
        << csv_field(render_algebra_spec(alg)) << ',' << to_string(*mode) << ','
        << r.size << ',' << to_decimal(r.count) << '\n';
    return;
  }
  if (full) {
    out << "maxSize=" << r.max_size << " count=" << to_decimal(r.count) << '\n';
  } else {
    out << "size=" << r.size << " count=" << to_decimal(r.count) << '\n';
  }
  for (const auto& s : r.sequences) out << sequence_text(s) << '\n';
  if (r.truncated) out << "... (truncated)\n";
}

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline CommandResult run_command(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CLI::App app{"Exceptional sequences over Nakayama algebras", "nakaseq"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for enumeration")
      ->check(CLI::Range(1u, 256u));

  detail::EnumerateArgs en;
  auto add_enum_options = [](CLI::App* sub, detail::EnumerateArgs& a, bool witnesses) {
    sub->add_option("--algebra", a.algebra, "Algebra spec")->required();
    sub->add_option("--mode", a.mode, "weak or standard")
        ->required()
        ->check(CLI::IsMember({"weak", "standard"}));
    auto* full = sub->add_flag("--full", a.full, "Count full sequences (default)");
    auto* size = sub->add_option("--size", a.size, "Count sequences of this length");
    full->excludes(size);
    auto* json = sub->add_flag("--json", a.json, "JSON output");
    auto* csv = sub->add_flag("--csv", a.csv, "CSV output");
    json->excludes(csv);
    if (witnesses) {
      sub->add_option("--witnesses", a.witnesses, "Keep at most this many witnesses");
    }
  };
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count and list sequences");
  add_enum_options(enumerate_cmd, en, true);
  auto* count_cmd = app.add_subcommand("count", "Count sequences without witnesses");
  add_enum_options(count_cmd, en, false);

  std::string suite, range;
  auto* verify_cmd = app.add_subcommand("verify", "Check predicted counts and properties");
  verify_cmd->add_option("--suite", suite, "Suite name")->required();
  verify_cmd->add_option("--range", range, "Parameter range a..b")->required();
  verify_cmd->add_flag("--csv", "CSV output (the default)");

  std::string algebra, from, to, module_text, regions_text = "hom,ext", format, path;
  int ext_upto = 1;
  auto* hom_cmd = app.add_subcommand("hom", "Hom and Ext dimensions");
  hom_cmd->add_option("--algebra", algebra, "Algebra spec")->required();
  hom_cmd->add_option("--from", from, "Source module t,l")->required();
  hom_cmd->add_option("--to", to, "Target module t,l")->required();
  hom_cmd->add_option("--ext-upto", ext_upto, "Highest Ext degree")
      ->check(CLI::Range(0, 64));

  auto* render_cmd = app.add_subcommand("render", "Draw Hom/Ext regions of a module");
  render_cmd->add_option("--algebra", algebra, "Algebra spec")->required();
  render_cmd->add_option("--module", module_text, "Module t,l")->required();
  render_cmd->add_option("--regions", regions_text, "Comma list of hom, ext");
  render_cmd->add_option("--format", format, "svg or ascii")
      ->required()
      ->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--out", path, "Output file (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {kExitOk, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return {kExitUsage, out.str(), err.str()};
  }

  try {
    if (enumerate_cmd->parsed()) {
      detail::run_enumerate(en, true, threads, out);
    } else if (count_cmd->parsed()) {
      detail::run_enumerate(en, false, threads, out);
    } else if (verify_cmd->parsed()) {
      const auto s = parse_suite(suite);
      if (!s) throw UsageError("unknown suite '" + suite + "'");
      const auto [lo, hi] = detail::parse_range(range);
      const auto& info = suite_info(*s);
      if (lo < info.lo || hi > info.hi) {
        throw UsageError("range for " + std::string(info.name) + " must lie within " +
                         std::to_string(info.lo) + ".." + std::to_string(info.hi));
      }
      VerifyConfig cfg{threads, detail::node_budget_from_env()};
      bool all = true;
      out << kVerifyCsvHeader << '\n';
      for (int p = lo; p <= hi; ++p) {
        const auto row = verify_one(*s, p, cfg);
        all = all && row.match;
        out << verify_csv_row(row) << '\n';
      }
      return {all ? kExitOk : kExitMismatch, out.str(), err.str()};
    } else if (hom_cmd->parsed()) {
      const auto alg = parse_algebra_spec(algebra);
      const auto m = parse_module_literal(from);
      const auto n = parse_module_literal(to);
      alg.require(m);
      alg.require(n);
      out << "hom=" << hom_dim(alg, m, n);
      for (int r = 1; r <= ext_upto; ++r) out << " ext" << r << '=' << ext_dim(alg, m, n, r);
      out << '\n';
    } else if (render_cmd->parsed()) {
      const auto alg = parse_algebra_spec(algebra);
      const auto m = parse_module_literal(module_text);
      const auto regions = detail::parse_regions(regions_text);
      const auto text = format == "svg" ? render_svg(alg, m, regions)
                                        : render_ascii(alg, m, regions);
      if (path.empty()) {
        out << text;
      } else {
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << text)) throw Error("cannot write '" + path + "'");
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return {kExitBudget, out.str(), err.str()};
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return {kExitUsage, out.str(), err.str()};
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return {kExitUsage, out.str(), err.str()};
  }
  return {kExitOk, out.str(), err.str()};
}

}  // namespace nakaseq::cli

#endif  // NAKASEQ_TOOLS_CLI_HPP
