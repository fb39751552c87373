// Copyright 2026 The fairdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fairdom command-line tool: compute invariants, generate graphs, run
// verification suites.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 usage or parse error,
// 3 a solver or corpus cap was exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairdom/fairdom.hpp"
#include "json.hpp"

namespace {

using namespace fairdom;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default per-solver order caps; FD_MAX_N can only lower them.
constexpr int kSubsetCap = 40;
constexpr int kAlphaCap = kMaxOrder;

std::optional<int> env_max_n() {
  const char* raw = std::getenv("FD_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw error(errc::parse_error, std::string("FD_MAX_N is not an integer: ") + raw);
  }
}

int cap(int base) {
  const auto env = env_max_n();
  return env ? std::min(base, *env) : base;
}

void require_cap(const Graph& g, int limit, const std::string& what) {
  if (g.order() > limit) {
    throw CapExceeded(what + " refused for order " + std::to_string(g.order()) + " (cap " +
                      std::to_string(limit) + ")");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) {
    if (!field.empty()) out.push_back(field);
  }
  return out;
}

json set_json(VertexSet s) { return s.to_vector(); }

json fairness_json(const std::optional<Fairness>& f) {
  if (!f) return nullptr;
  if (f->is_vacuous()) return "vacuous";
  return f->k();
}

// ---------------------------------------------------------------------------
// compute

struct Row {
  std::string graph6;
  std::string param;
  json value;
  std::string value_text;
  json witness;
  std::string witness_text;
  std::optional<std::string> fairness_text;
  json fairness;
};

Row fd_row(const std::string& g6, const std::string& param, const FDResult& r) {
  Row row{g6, param, r.value, std::to_string(r.value), set_json(r.witness),
          r.witness.to_string(), std::nullopt, fairness_json(r.fairness)};
  // outr carries the common outward degree of its witness instead of a k.
  const char* tag = r.mode == FDMode::outr ? "d=" : "k=";
  if (r.fairness) row.fairness_text = tag + r.fairness->to_string();
  return row;
}

Row invariant_row(const std::string& g6, const std::string& param, const InvariantResult& r) {
  return {g6, param, r.value, std::to_string(r.value), set_json(r.witness),
          r.witness.to_string(), std::nullopt, nullptr};
}

Row compute_one(const Graph& g, const std::string& g6, const std::string& tag) {
  if (tag == "fd") {
    require_cap(g, cap(kSubsetCap), "fd");
    return fd_row(g6, tag, fd_exact(g));
  }
  if (tag.rfind("kfd:", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(tag.substr(4), &used);
      if (used != tag.size() - 4) throw std::invalid_argument(tag);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad kfd parameter in \"" + tag + "\"");
    }
    require_cap(g, cap(kSubsetCap), "kfd");
    return fd_row(g6, tag, kfd_exact(g, k));
  }
  if (tag == "outr") {
    require_cap(g, cap(kSubsetCap), "outr");
    return fd_row(g6, tag, outr_exact(g));
  }
  if (tag == "gamma") {
    require_cap(g, cap(kSubsetCap), "gamma");
    return invariant_row(g6, tag, domination_number(g));
  }
  if (tag == "gamma2") {
    require_cap(g, cap(kSubsetCap), "gamma2");
    return invariant_row(g6, tag, k_domination_number(g, 2));
  }
  if (tag == "alpha") {
    require_cap(g, cap(kAlphaCap), "alpha");
    return invariant_row(g6, tag, independence_number(g));
  }
  if (tag == "chi") {
    require_cap(g, cap(kMaxChromaticOrder), "chi");
    const InvariantResult r = chromatic_number(g);
    std::string text = "[";
    for (std::size_t i = 0; i < r.coloring.size(); ++i) {
      text += (i ? "," : "") + std::to_string(r.coloring[i]);
    }
    return {g6, tag, r.value, std::to_string(r.value), r.coloring, text + "]", std::nullopt,
            nullptr};
  }
  if (tag == "profile") {
    const DegreeProfile p = degree_profile(g);
    json value = {{"min_degree", p.min_degree},
                  {"max_degree", p.max_degree},
                  {"average_degree", p.average_degree.to_string()},
                  {"span", p.span},
                  {"rep", p.rep}};
    std::string text = "min=" + std::to_string(p.min_degree) +
                       ",max=" + std::to_string(p.max_degree) +
                       ",avg=" + p.average_degree.to_string() +
                       ",span=" + std::to_string(p.span) + ",rep=" + std::to_string(p.rep);
    std::string seq = "[";
    for (std::size_t i = 0; i < p.degree_sequence.size(); ++i) {
      seq += (i ? "," : "") + std::to_string(p.degree_sequence[i]);
    }
    return {g6, tag, value, text, p.degree_sequence, seq + "]", std::nullopt, nullptr};
  }
  throw error(errc::parse_error, "unknown parameter tag \"" + tag + "\"");
}

struct ComputeOptions {
  std::string g6;
  std::string g6_file;
  std::string edges;
  std::string family;
  std::string params = "fd";
  std::string format = "text";
};

int run_compute(const ComputeOptions& o) {
  std::vector<Graph> graphs;
  if (!o.g6.empty()) graphs.push_back(parse_graph6(o.g6));
  if (!o.g6_file.empty()) {
    for (Graph& g : parse_graph6_lines(read_file(o.g6_file))) graphs.push_back(std::move(g));
  }
  if (!o.edges.empty()) graphs.push_back(parse_edge_list(read_file(o.edges)));
  if (!o.family.empty()) graphs.push_back(make_family(o.family));

  const std::vector<std::string> tags = split(o.params, ',');
  if (tags.empty()) throw error(errc::parse_error, "no parameter tags given");
  // Validate tags before any solver runs.
  for (const std::string& t : tags) {
    if (t != "fd" && t != "outr" && t != "gamma" && t != "gamma2" && t != "alpha" &&
        t != "chi" && t != "profile" && t.rfind("kfd:", 0) != 0) {
      throw error(errc::parse_error, "unknown parameter tag \"" + t + "\"");
    }
  }

  json rows = json::array();
  for (const Graph& g : graphs) {
    const std::string g6 = write_graph6(g);
    for (const std::string& t : tags) {
      const Row r = compute_one(g, g6, t);
      if (o.format == "json") {
        rows.push_back({{"graph6", r.graph6},
                        {"param", r.param},
                        {"value", r.value},
                        {"witness", r.witness},
                        {"fairness", r.fairness}});
      } else {
        std::cout << r.graph6 << '\t' << r.param << '\t' << r.value_text << '\t'
                  << r.witness_text;
        if (r.fairness_text) std::cout << '\t' << *r.fairness_text;
        std::cout << '\n';
      }
    }
  }
  if (o.format == "json") std::cout << rows.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  std::string family;
  std::string stream;
  std::string out;
  int count = 1;
};

std::pair<std::string, std::vector<int>> parse_stream_tag(const std::string& tag) {
  const auto colon = tag.find(':');
  if (colon == std::string::npos) throw error(errc::parse_error, "stream tag needs \"name:N\"");
  std::vector<int> args;
  for (const std::string& f : split(tag.substr(colon + 1), ',')) {
    try {
      std::size_t used = 0;
      args.push_back(std::stoi(f, &used));
      if (used != f.size()) throw std::invalid_argument(f);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad stream parameter \"" + f + "\"");
    }
  }
  return {tag.substr(0, colon), args};
}

template <class Stream>
void emit_stream(Stream s, std::ostream& out) {
  while (auto g = s.next()) out << write_graph6(*g) << '\n';
}

void require_args(const std::vector<int>& args, std::size_t n, const std::string& name) {
  if (args.size() != n) {
    throw error(errc::bad_arity,
                name + " takes " + std::to_string(n) + " parameter(s)");
  }
}

int run_generate(const GenerateOptions& o, std::uint64_t seed) {
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw error(errc::parse_error, "cannot write " + o.out);
  }
  std::ostream& out = o.out.empty() ? std::cout : file;

  if (!o.family.empty()) {
    out << write_graph6(make_family(o.family)) << '\n';
    return kOk;
  }
  const auto [name, args] = parse_stream_tag(o.stream);
  if (name == "trees") {
    require_args(args, 1, name);
    emit_stream(trees_exhaustive(args[0]), out);
  } else if (name == "mops") {
    require_args(args, 1, name);
    emit_stream(mops_exhaustive(args[0]), out);
  } else if (name == "graphs") {
    require_args(args, 1, name);
    emit_stream(graphs_exhaustive(args[0]), out);
  } else if (name == "random_tree" || name == "random_mop" || name == "random_graph" ||
             name == "random_regular") {
    require_args(args, name == "random_regular" ? 2 : 1, name);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < o.count; ++i) {
      const std::uint64_t s = rng();
      Graph g;
      if (name == "random_tree") g = random_tree(args[0], s);
      if (name == "random_mop") g = random_mop(args[0], s);
      if (name == "random_graph") g = random_graph(args[0], s);
      if (name == "random_regular") g = random_regular(args[0], args[1], s);
      out << write_graph6(g) << '\n';
    }
  } else {
    throw error(errc::unknown_family, "unknown stream \"" + name + "\"");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite;
  int max_n = 0;
  std::uint64_t max_instances = 0;
  std::string report;
  std::string format = "text";
  bool list = false;
};

int run_verify(const VerifyOptions& o, std::uint64_t seed) {
  if (o.list) {
    for (const verify::Suite& s : verify::registry()) {
      std::cout << s.id << '\t' << s.description << '\n';
    }
    return kOk;
  }
  if (o.suite.empty()) throw error(errc::parse_error, "--suite is required");
  verify::Limits limits;
  limits.max_n = o.max_n;
  limits.seed = seed;
  if (o.max_instances > 0) limits.max_instances = o.max_instances;

  const verify::Suite& suite = verify::find_suite(o.suite);
  const int solver_cap = cap(kMaxOrder);
  if (verify::effective_max_n(suite, limits) > solver_cap) {
    throw CapExceeded("suite max-n exceeds FD_MAX_N=" + std::to_string(solver_cap));
  }
  const verify::Report report = verify::run_suite(o.suite, limits, solver_cap);
  const std::string text =
      o.format == "json" ? verify::to_json(report).dump(2) + "\n" : verify::to_text(report);
  if (o.report.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.report);
    if (!file) throw error(errc::parse_error, "cannot write " + o.report);
    file << text;
    std::cout << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
              << report.instances_checked << " instances, " << report.failures.size()
              << " failures)\n";
  }
  return report.passed() ? kOk : kCheckFailed;
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::too_large:
    case errc::instance_too_large:
      return kCap;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairdom: exact fair domination and related invariants"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized generators and corpora")
      ->capture_default_str();

  ComputeOptions compute;
  auto* cmd_compute = app.add_subcommand("compute", "compute invariants of input graphs");
  auto* in_g6 = cmd_compute->add_option("--g6", compute.g6, "graph6 text");
  auto* in_file = cmd_compute->add_option("--g6-file", compute.g6_file, "file of graph6 lines");
  auto* in_edges = cmd_compute->add_option("--edges", compute.edges, "edge-list file");
  auto* in_family = cmd_compute->add_option("--family", compute.family, "family spec");
  in_g6->excludes(in_file, in_edges, in_family);
  in_file->excludes(in_edges, in_family);
  in_edges->excludes(in_family);
  cmd_compute->add_option("--param", compute.params,
                          "comma list of fd, kfd:K, outr, gamma, gamma2, alpha, chi, profile")
      ->capture_default_str();
  cmd_compute->add_option("--format", compute.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_compute->callback([&] {
    if (compute.g6.empty() && compute.g6_file.empty() && compute.edges.empty() &&
        compute.family.empty()) {
      throw CLI::RequiredError("one of --g6, --g6-file, --edges, --family");
    }
  });

  GenerateOptions generate;
  auto* cmd_generate = app.add_subcommand("generate", "emit graph6 lines");
  auto* gen_family = cmd_generate->add_option("--family", generate.family, "family spec");
  auto* gen_stream = cmd_generate->add_option(
      "--stream", generate.stream,
      "trees:N, mops:N, graphs:N, random_tree:N, random_mop:N, random_graph:N, "
      "random_regular:N,R");
  gen_family->excludes(gen_stream);
  cmd_generate->add_option("--count", generate.count, "graphs for random streams")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_generate->add_option("--out", generate.out, "output path (default stdout)");
  cmd_generate->callback([&] {
    if (generate.family.empty() && generate.stream.empty()) {
      throw CLI::RequiredError("one of --family, --stream");
    }
  });

  VerifyOptions verify_opts;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", verify_opts.suite, "suite id");
  cmd_verify->add_option("--max-n", verify_opts.max_n, "largest corpus order")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max-instances", verify_opts.max_instances, "instance limit");
  cmd_verify->add_option("--report", verify_opts.report, "write the report here");
  cmd_verify->add_option("--format", verify_opts.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_verify->add_flag("--list", verify_opts.list, "list registered suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (cmd_compute->parsed()) return run_compute(compute);
    if (cmd_generate->parsed()) return run_generate(generate, seed);
    return run_verify(verify_opts, seed);
  } catch (const CapExceeded& e) {
    std::cerr << "error: CapExceeded: " << e.what() << '\n';
    return kCap;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
