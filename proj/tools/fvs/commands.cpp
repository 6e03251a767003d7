#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "fvs/branching.hpp"
#include "fvs/oracle.hpp"
#include "instance_file.hpp"

namespace fvs::cli {

namespace {

void print_set(std::ostream& out, const std::vector<Vertex>& vertices) {
  for (Vertex v : vertices) out << v << '\n';
}

}  // namespace

std::vector<std::int32_t> parse_vertex_list(const std::string& text) {
  std::vector<std::int32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, comma - pos);
    std::int32_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 1) {
      throw std::invalid_argument("bad vertex \"" + std::string(item) + "\" in list \"" + text + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

int cmd_solve(const SolveRequest& request, std::ostream& out, std::ostream& err) {
  if (request.budget < 0) {
    err << "error: budget must be nonnegative, got " << request.budget << '\n';
    return kExitError;
  }
  if (request.budget > std::numeric_limits<int>::max()) {
    err << "error: budget too large\n";
    return kExitError;
  }
  Graph g;
  std::vector<Vertex> forbidden;
  try {
    g = read_instance_file(request.path);
    if (!request.forbid.empty()) forbidden = parse_vertex_list(request.forbid);
  } catch (const std::exception& e) {
    err << "error: " << request.path << ": " << e.what() << '\n';
    return kExitError;
  }

  std::optional<ExtendedInstance> inst;
  try {
    inst.emplace(std::move(g), static_cast<int>(request.budget), forbidden);
  } catch (const std::invalid_argument& e) {
    err << "error: --forbid: " << e.what() << '\n';
    return kExitError;
  }

  SearchStats stats;
  AuditLog log;
  SolveOptions options;
  options.cutoffs_enabled = !request.no_cutoff;
  const Solution solution = solve(*inst, options, stats, request.audit ? &log : nullptr);

  if (solution) {
    out << "YES\n";
    print_set(out, solution.vertices());
  } else {
    out << "NO\n";
  }
  if (request.stats) {
    out << "nodes_visited=" << stats.nodes_visited << '\n'
        << "max_path_length=" << stats.max_path_length << '\n'
        << "cutoff_hits=" << stats.cutoff_hits << '\n'
        << "f_prime=";
    if (stats.f_prime_on_success) out << *stats.f_prime_on_success;
    out << '\n';
  }
  if (request.audit) {
    const auto violations = verify_audit(log);
    if (violations.empty()) {
      out << "AUDIT OK\n";
    } else {
      for (const auto& v : violations) out << "AUDIT VIOLATION " << v.rule << ": " << v.detail << '\n';
    }
  }
  return solution ? kExitYes : kExitNo;
}

int cmd_minimum(const std::string& path, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_instance_file(path);
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kExitError;
  }
  const auto set = minimum_fvs(g);
  out << set.size() << '\n';
  print_set(out, set);
  return kExitYes;
}

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_instance_file(path);
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kExitError;
  }
  if (g.vertex_count() > kOracleVertexLimit) {
    err << "error: oracle accepts at most " << kOracleVertexLimit << " vertices, file has " << g.vertex_count()
        << '\n';
    return kExitError;
  }
  const auto set = brute_force_min_fvs(g);
  out << set->size() << '\n';
  print_set(out, *set);
  return kExitYes;
}

int cmd_gen(const GenRequest& request, std::ostream& err) {
  if (request.n < 0 || request.n > std::numeric_limits<Vertex>::max() || request.size < 0) {
    err << "error: n and the size argument must be nonnegative\n";
    return kExitError;
  }
  Graph g;
  std::ostringstream comment;
  try {
    if (request.kind == "random") {
      g = gen_random_graph(static_cast<Vertex>(request.n), static_cast<std::size_t>(request.size), request.seed);
      comment << "random n=" << request.n << " m=" << request.size << " seed=" << request.seed;
    } else if (request.kind == "planted") {
      if (request.size > std::numeric_limits<int>::max()) throw std::invalid_argument("k too large");
      auto planted = gen_planted(static_cast<Vertex>(request.n), static_cast<int>(request.size), request.seed);
      g = std::move(planted.graph);
      comment << "planted n=" << request.n << " k=" << request.size << " seed=" << request.seed;
    } else {
      err << "error: unknown generator \"" << request.kind << "\" (expected random or planted)\n";
      return kExitError;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::ofstream file(request.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << request.out_path << '\n';
    return kExitError;
  }
  write_instance(file, g, comment.str());
  file.close();
  if (!file) {
    err << "error: write to " << request.out_path << " failed\n";
    return kExitError;
  }
  return kExitYes;
}

}  // namespace fvs::cli
