// Command-line front end.
//
// Exit codes: 0 success, 2 invalid arguments or input, 3 an emitted
// certificate failed re-validation, 4 verify-family produced a FLAG row,
// 5 a --max-nodes budget left a level undecided.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdepth/sdepth.hpp"

namespace {

using sdepth::io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitFlag = 4;
constexpr int kExitUndecided = 5;

struct RunConfig {
  int d = 0;
  std::vector<int> parts;
  int k = 0;
  int max_n = 0;
  int n = 0;
  int threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_nodes = 0;
  bool pretty = false;
  bool exact = false;
  bool random = false;
  std::string input;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw sdepth::Error(sdepth::ErrorKind::Parse, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw sdepth::Error(sdepth::ErrorKind::Parse, e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw sdepth::Error(sdepth::ErrorKind::InvalidArgument, "cannot write " + cfg.out);
  out << text;
}

std::string dump(const json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

void check_threads(const RunConfig& cfg) {
  if (cfg.threads < 1) throw sdepth::Error(sdepth::ErrorKind::InvalidArgument, "--threads must be at least 1");
}

/// Random clutter on n vertices: minimal members of a few random subsets,
/// redrawn until every vertex is covered.
sdepth::Clutter random_clutter(int n, std::uint64_t seed) {
  if (n < 1 || n > sdepth::kMaxVertices)
    throw sdepth::Error(sdepth::ErrorKind::InvalidArgument, "--n must be in [1, 24]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<sdepth::Mask> pick(1, sdepth::full_mask(n));
  std::uniform_int_distribution<int> how_many(1, 2 * n);
  while (true) {
    std::vector<sdepth::Mask> sets(how_many(rng));
    for (auto& s : sets) s = pick(rng);
    const auto minimal = sdepth::detail::minimalize(sets);
    sdepth::Mask support = 0;
    for (auto m : minimal) support |= m;
    if (support == sdepth::full_mask(n)) return sdepth::Clutter(n, minimal);
  }
}

int cmd_gen(const RunConfig& cfg) {
  if (cfg.random) {
    emit(cfg, dump(sdepth::io::to_json(random_clutter(cfg.n, cfg.seed)), cfg.pretty));
    return kExitOk;
  }
  const auto inst = sdepth::complete_kpartite(cfg.d, cfg.parts);
  emit(cfg, dump(sdepth::io::to_json(inst), cfg.pretty));
  return kExitOk;
}

int cmd_sdepth(const RunConfig& cfg) {
  check_threads(cfg);
  const auto clutter = sdepth::io::clutter_from_json(parse_json(read_input(cfg.input)));
  const auto poset = sdepth::build_poset(clutter);
  const auto result = sdepth::exact_sdepth(poset, {.threads = cfg.threads, .max_nodes = cfg.max_nodes});
  const json out = sdepth::io::to_json(result);

  // Re-read what is about to be emitted and check it from scratch.
  const auto [reread, level] = sdepth::io::certificate_from_json(json::parse(out.dump())["certificate"], clutter.vertex_count());
  if (level != result.value || !sdepth::validate_partition(poset, reread, level)) {
    std::cerr << "error: emitted certificate failed validation\n";
    return kExitCertificate;
  }
  emit(cfg, dump(out, cfg.pretty));
  return kExitOk;
}

int cmd_bounds(const RunConfig& cfg) {
  check_threads(cfg);
  sdepth::Clutter clutter(1, {1});
  sdepth::VertexPartition partition;
  int d = cfg.d;
  if (!cfg.parts.empty()) {
    auto inst = sdepth::complete_kpartite(cfg.d, cfg.parts);
    clutter = inst.clutter;
    partition = inst.partition;
  } else {
    const json j = parse_json(read_input(cfg.input));
    clutter = sdepth::io::clutter_from_json(j);
    if (!j.contains("partition"))
      throw sdepth::Error(sdepth::ErrorKind::InvalidArgument, "input has no \"partition\"; pass --d and --parts instead");
    partition = sdepth::io::partition_from_json(j["partition"], clutter.vertex_count());
    if (d == 0) {
      const auto uniform = sdepth::is_uniform(clutter);
      if (!uniform) throw sdepth::Error(sdepth::ErrorKind::NotUniform, "clutter is not uniform");
      d = *uniform;
    }
  }
  const auto report = sdepth::bounds_report(clutter, partition, d);
  json out = sdepth::io::to_json(report);
  if (cfg.exact) {
    const auto poset = sdepth::build_poset(clutter);
    const auto result = sdepth::exact_sdepth(poset, {.threads = cfg.threads, .max_nodes = cfg.max_nodes});
    if (!sdepth::validate_partition(poset, result.certificate, result.value)) {
      std::cerr << "error: certificate failed validation\n";
      return kExitCertificate;
    }
    out["exact_sdepth"] = result.value;
    out["verdict"] = result.value > report.paper_upper_floor ? "FLAG" : "PASS";
  }
  emit(cfg, dump(out, cfg.pretty));
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg) {
  const auto clutter = sdepth::io::clutter_from_json(parse_json(read_input(cfg.input)));
  const auto first = sdepth::decompose_dpartition(clutter);
  json out;
  if (!first) {
    out["parts"] = nullptr;
    out["decompositions"] = json::array();
    emit(cfg, dump(out, cfg.pretty));
    return kExitOk;
  }
  out = sdepth::io::to_json(*first);
  out["minimal_cover"] = json::array();
  out["unit_cover"] = json::array();
  for (auto part : first->parts) {
    out["minimal_cover"].push_back(sdepth::is_minimal_vertex_cover(clutter, part));
    out["unit_cover"].push_back(sdepth::is_unit_cover(clutter, part));
  }
  out["verified"] = sdepth::verify_dpartition(clutter, *first);
  const auto all = sdepth::enumerate_dpartitions(clutter);
  out["decompositions"] = json::array();
  for (const auto& p : all) out["decompositions"].push_back(sdepth::io::to_json(p)["parts"]);
  out["tightest_integral_bound"] = sdepth::io::to_json(*sdepth::tightest_integral_bound(clutter, all));
  emit(cfg, dump(out, cfg.pretty));
  return kExitOk;
}

std::string pretty_table(const std::vector<sdepth::FamilyRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  std::stringstream hs(sdepth::kFamilyCsvHeader);
  for (std::string h; std::getline(hs, h, ',');) header.push_back(h);
  cells.push_back(header);
  for (const auto& row : rows) cells.push_back(sdepth::family_fields(row));
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
    out << '\n';
  }
  return out.str();
}

int cmd_verify_family(const RunConfig& cfg) {
  check_threads(cfg);
  const auto rows = sdepth::sweep_family(
      {.d = cfg.d, .k = cfg.k, .max_n = cfg.max_n, .threads = cfg.threads, .max_nodes = cfg.max_nodes});
  for (const auto& row : rows)
    if (row.result && !sdepth::validate_partition(
                          sdepth::build_poset(sdepth::complete_kpartite(cfg.d, row.report.r).clutter),
                          row.result->certificate, row.result->value)) {
      std::cerr << "error: certificate failed validation\n";
      return kExitCertificate;
    }
  emit(cfg, cfg.pretty ? pretty_table(rows) : sdepth::family_csv(rows));
  const bool flagged = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == sdepth::Verdict::Flag; });
  const bool undecided =
      std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == sdepth::Verdict::Undecided; });
  return flagged ? kExitFlag : undecided ? kExitUndecided : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stanley depth of squarefree monomial ideals and bounds for k-partite clutters"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "Write a complete k-partite d-uniform clutter (or a random one) as JSON");
  gen->add_option("--d", cfg.d, "Edge size");
  gen->add_option("--parts", cfg.parts, "Block sizes, e.g. 2,3,4")->delimiter(',');
  gen->add_flag("--random", cfg.random, "Random clutter on --n vertices instead");
  gen->add_option("--n", cfg.n, "Vertex count for --random");
  gen->add_option("--seed", cfg.seed, "Seed for --random")->capture_default_str();

  auto* sd = app.add_subcommand("sdepth", "Exact Stanley depth of a clutter's edge ideal, with certificate");
  sd->add_option("input", cfg.input, "Clutter JSON file ('-' or omitted: stdin)");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and brute-force counts for a complete k-partite clutter");
  bounds->add_option("input", cfg.input, "Output of gen ('-' or omitted: stdin)");
  bounds->add_option("--d", cfg.d, "Edge size");
  bounds->add_option("--parts", cfg.parts, "Block sizes; generates the instance instead of reading input")->delimiter(',');
  bounds->add_flag("--exact", cfg.exact, "Also compute the exact Stanley depth");

  auto* dec = app.add_subcommand("decompose", "Split a uniform clutter into disjoint minimal vertex covers");
  dec->add_option("input", cfg.input, "Clutter JSON file ('-' or omitted: stdin)");

  auto* fam = app.add_subcommand("verify-family", "Sweep complete k-partite instances into a CSV report");
  fam->add_option("--d", cfg.d, "Edge size")->required();
  fam->add_option("--k", cfg.k, "Number of blocks")->required();
  fam->add_option("--max-n", cfg.max_n, "Largest vertex count")->required();

  for (auto* sub : {gen, sd, bounds, dec, fam}) {
    sub->add_flag("--pretty", cfg.pretty, "Human-readable output");
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  }
  for (auto* sub : {sd, bounds, fam}) {
    sub->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
    sub->add_option("--max-nodes", cfg.max_nodes, "Search node budget per root branch (0: unlimited)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*sd) return cmd_sdepth(cfg);
    if (*bounds) return cmd_bounds(cfg);
    if (*dec) return cmd_decompose(cfg);
    if (*fam) return cmd_verify_family(cfg);
  } catch (const sdepth::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == sdepth::ErrorKind::SearchBudgetExceeded) return kExitUndecided;
    if (e.kind() == sdepth::ErrorKind::InvariantViolation) return kExitCertificate;
    return kExitUsage;
  }
  return kExitUsage;
}
