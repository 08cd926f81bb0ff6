// sandpile: command-line front end for the sandpile library.
//
// Exit codes: 0 success, 1 domain error (JSON error object on stdout),
// 2 usage error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sandpile/classify.hpp"
#include "sandpile/closedform.hpp"
#include "sandpile/dynamics.hpp"
#include "sandpile/fixtures.hpp"
#include "sandpile/forests.hpp"
#include "sandpile/io.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/rodometer.hpp"

using namespace sandpile;
using io::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixtureMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string graph_file;
  std::string sandpile;
  std::string fixture;
  std::string group = "r";
  std::string box = "d-1:d+5";
  std::string suite;
  std::size_t max_vertices = 5;
  bool failures_only = false;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, origin + ": " + e.what());
  }
}

const Fixture* fixture_of(const Options& o) { return o.fixture.empty() ? nullptr : &find_fixture(o.fixture); }

Multigraph load_graph(const Options& o) {
  const int sources = !o.family.empty() + !o.graph_file.empty() + !o.fixture.empty();
  if (sources != 1) throw UsageError("exactly one of --family, --graph, --fixture is required");
  if (const auto* f = fixture_of(o)) return io::parse_family(f->family);
  if (!o.family.empty()) return io::parse_family(o.family);
  return io::graph_from_json(parse_json(read_file(o.graph_file), o.graph_file));
}

Sandpile load_sandpile(const Options& o, const Multigraph& g) {
  if (const auto* f = fixture_of(o)) {
    if (!o.sandpile.empty()) throw UsageError("--fixture supplies the sandpile; drop --sandpile");
    return Sandpile(g, f->sandpile);
  }
  if (o.sandpile.empty()) throw UsageError("--sandpile is required");
  if (std::filesystem::is_regular_file(o.sandpile)) {
    const auto s = io::sandpile_from_json(parse_json(read_file(o.sandpile), o.sandpile));
    return Sandpile(g, s.values());
  }
  return Sandpile(g, io::parse_int_csv(o.sandpile));
}

void emit(const Options& o, const json& j) {
  if (o.out.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + o.out + "'");
  out << j.dump() << "\n";
}

void expect_fixture(const Options& o, bool ok, const std::string& what) {
  if (!o.fixture.empty() && !ok) throw FixtureMismatch("fixture '" + o.fixture + "': " + what + " differs from the recorded value");
}

// ---- gen / info -----------------------------------------------------------

int cmd_gen(const Options& o) {
  const auto g = load_graph(o);
  emit(o, io::graph_to_json(g));
  std::cerr << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, sink " << g.sink() << "\n";
  return 0;
}

int cmd_info(const Options& o) {
  if (o.family.empty() && o.graph_file.empty() && o.fixture.empty()) {
    json fx = json::array();
    for (const auto& f : fixtures()) fx.push_back(f.name);
    emit(o, {{"version", kVersion},
             {"families", {"path:k", "complete:m", "cycle:k", "wheel:m", "banana:k", "star:k", "cone:<family>"}},
             {"groups", {"z", "r", "q:m"}},
             {"fixtures", fx},
             {"suites", {"matrix-tree", "inverse-entry", "closed-forms"}}});
    return 0;
  }
  const auto g = load_graph(o);
  const ReducedLaplacian lap(g);
  emit(o, {{"graph", io::graph_to_json(g)},
           {"degrees", io::int_vector_to_json(g.degree_vector())},
           {"non_sink_vertices", g.non_sink_vertices()},
           {"reduced_laplacian", io::matrix_to_json(lap.matrix())},
           {"det_reduced_laplacian", io::int_to_json(lap.det())},
           {"inverse_reduced_laplacian", io::matrix_to_json(lap.inverse())},
           {"is_tree", is_tree(g)},
           {"is_cone_of_regular", is_cone_of_regular(g)}});
  std::cerr << "spanning trees: " << lap.det() << "\n";
  return 0;
}

// ---- stabilize / odometer / classify --------------------------------------

int cmd_stabilize(const Options& o) {
  const auto g = load_graph(o);
  const auto sigma = load_sandpile(o, g);
  const auto res = stabilize(g, sigma);
  if (const auto* f = fixture_of(o)) expect_fixture(o, res.odometer == f->z_odometer, "odometer");
  emit(o, {{"stable", io::int_vector_to_json(res.stable_config.values())},
           {"odometer", io::int_vector_to_json(res.odometer)}});
  std::cerr << "topplings: " << res.topple_count << "\n";
  return 0;
}

int cmd_odometer(const Options& o) {
  const auto g = load_graph(o);
  const auto sigma = load_sandpile(o, g);
  const auto group = Group::parse(o.group);
  const auto rep = odometer(g, sigma, group);
  if (const auto* f = fixture_of(o)) {
    if (group.kind() == Group::Kind::Reals) expect_fixture(o, rep.odometer == f->r_odometer, "R-odometer");
    if (group.kind() == Group::Kind::Integers) expect_fixture(o, rep.odometer == to_rational(f->z_odometer), "Z-odometer");
  }
  emit(o, {{"group", group.name()},
           {"odometer", io::rat_vector_to_json(rep.odometer)},
           {"fast_path_used", rep.fast_path_used}});
  std::cerr << group.name() << "-odometer computed" << (rep.fast_path_used ? " (uniformly large fast path)" : "") << "\n";
  return 0;
}

int cmd_classify(const Options& o) {
  const auto g = load_graph(o);
  const auto sigma = load_sandpile(o, g);
  const auto v = classify(g, sigma);
  if (const auto* f = fixture_of(o)) {
    expect_fixture(o, v.immutable == f->immutable, "verdict");
    expect_fixture(o, v.z_odometer == f->z_odometer, "Z-odometer");
    expect_fixture(o, v.r_odometer == f->r_odometer, "R-odometer");
  }
  emit(o, {{"immutable", v.immutable},
           {"z_odometer", io::int_vector_to_json(v.z_odometer)},
           {"r_odometer", io::rat_vector_to_json(v.r_odometer)},
           {"criterion", std::string(to_string(v.criterion))}});
  std::cerr << (v.immutable ? "immutable" : "mutable") << " (" << to_string(v.criterion) << ")\n";
  return 0;
}

// ---- survey ---------------------------------------------------------------

/// "3", "d", "d+2", "d-1" resolved against degree d.
BigInt resolve_bound(const std::string& term, const BigInt& d) {
  auto number = [&](const std::string& text) {
    BigInt z;
    if (text.empty() || z.set_str(text, 10) != 0) throw UsageError("bad box bound '" + term + "'");
    return z;
  };
  if (term.empty()) throw UsageError("empty box bound");
  if (term[0] != 'd') return number(term);
  if (term == "d") return d;
  if (term[1] == '+') return d + number(term.substr(2));
  if (term[1] == '-') return d - number(term.substr(2));
  throw UsageError("bad box bound '" + term + "'");
}

std::pair<IntVector, IntVector> parse_box(const std::string& text, const Multigraph& g) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  const auto d = g.degree_vector();
  if (parts.size() != 1 && parts.size() != d.size())
    throw UsageError("--box needs one lo:hi range or one per non-sink vertex");
  IntVector lo, hi;
  for (std::size_t p = 0; p < d.size(); ++p) {
    const auto& range = parts.size() == 1 ? parts[0] : parts[p];
    const auto colon = range.find(':');
    if (colon == std::string::npos) throw UsageError("box range '" + range + "' must be lo:hi");
    lo.push_back(resolve_bound(range.substr(0, colon), d[p]));
    hi.push_back(resolve_bound(range.substr(colon + 1), d[p]));
    if (lo.back() < 0) lo.back() = 0;
    if (hi.back() < lo.back()) throw UsageError("empty box range '" + range + "'");
  }
  return {lo, hi};
}

int cmd_survey(const Options& o) {
  const auto g = load_graph(o);
  const auto [lo, hi] = parse_box(o.box, g);
  BigInt total = 1;
  for (std::size_t p = 0; p < lo.size(); ++p) total *= hi[p] - lo[p] + 1;
  if (total > 5'000'000) throw Error(ErrorCode::TooLarge, "box holds " + total.get_str() + " sandpiles (limit 5000000)");

  const ReducedLaplacian lap(g);
  const auto threshold = stability_threshold(g);
  std::size_t immutable = 0, mutable_count = 0, uniformly_large = 0, immutable_uniformly_large = 0;
  IntVector x = lo;
  for (;;) {
    const Sandpile sigma(g, x);
    const bool imm = classify(g, lap, sigma).immutable;
    (imm ? immutable : mutable_count)++;
    if (leq(threshold, x)) {
      ++uniformly_large;
      if (imm) ++immutable_uniformly_large;
    }
    std::size_t p = 0;
    while (p < x.size() && x[p] == hi[p]) x[p] = lo[p], ++p;
    if (p == x.size()) break;
    x[p] += 1;
  }
  json box = json::array();
  for (std::size_t p = 0; p < lo.size(); ++p) box.push_back({io::int_to_json(lo[p]), io::int_to_json(hi[p])});
  emit(o, {{"graph", io::graph_to_json(g)},
           {"box", box},
           {"total", immutable + mutable_count},
           {"immutable", immutable},
           {"mutable", mutable_count},
           {"uniformly_large", uniformly_large},
           {"uniformly_large_immutable", immutable_uniformly_large}});
  std::cerr << "immutable " << immutable << " / mutable " << mutable_count << "\n";
  return 0;
}

// ---- verify ---------------------------------------------------------------

/// Simple connected graphs on n vertices, one per isomorphism class, sink 0.
std::vector<Multigraph> simple_graphs_up_to_iso(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::vector<std::size_t> index(n * n);
  for (std::size_t e = 0; e < pairs.size(); ++e) index[pairs[e].first * n + pairs[e].second] = e;

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  auto connected = [&](std::uint64_t mask) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!(mask >> e & 1)) continue;
        const auto [a, b] = pairs[e];
        if (frontier >> a & 1) next |= std::uint64_t{1} << b;
        if (frontier >> b & 1) next |= std::uint64_t{1} << a;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (std::uint64_t{1} << n) - 1;
  };

  std::vector<Multigraph> out;
  std::vector<bool> done(std::size_t{1} << pairs.size(), false);
  for (std::uint64_t mask = 0; mask < done.size(); ++mask) {
    if (done[mask]) continue;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1) {
          const auto a = std::min(p[pairs[e].first], p[pairs[e].second]);
          const auto b = std::max(p[pairs[e].first], p[pairs[e].second]);
          image |= std::uint64_t{1} << index[a * n + b];
        }
      done[image] = true;
    }
    if (!connected(mask)) continue;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) edges.push_back({pairs[e].first, pairs[e].second, 1});
    out.push_back(Multigraph::from_edge_list(n, 0, edges));
  }
  return out;
}

std::vector<Multigraph> verify_family(std::size_t max_vertices) {
  if (max_vertices < 2) throw UsageError("--max-vertices must be at least 2");
  if (max_vertices > 7) throw UsageError("--max-vertices above 7 is not supported");
  std::vector<Multigraph> graphs;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    auto batch = simple_graphs_up_to_iso(n);
    graphs.insert(graphs.end(), batch.begin(), batch.end());
  }
  return graphs;
}

struct VerifyTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

void stream_line(const Options& o, std::ostream& out, VerifyTally& t, json line, bool ok) {
  ++t.checks;
  if (!ok) ++t.failures;
  line["ok"] = ok;
  if (!o.failures_only || !ok) out << line.dump() << "\n";
}

json verify_matrix_tree(const Options& o, std::ostream& out, VerifyTally& t) {
  std::size_t signed_failures = 0, magnitude_failures = 0;
  for (const auto& g : verify_family(o.max_vertices)) {
    const std::size_t n = g.vertex_count();
    const auto l = laplacian(g);
    const auto gj = io::graph_to_json(g);
    for (std::size_t complement = 1; complement <= 3 && complement < n; ++complement) {
      const auto tally = tally_constrained_forests(g, complement);
      for (std::uint64_t vm = 0; vm < (std::uint64_t{1} << n); ++vm) {
        if (static_cast<std::size_t>(__builtin_popcountll(vm)) != n - complement) continue;
        for (std::uint64_t wm = 0; wm < (std::uint64_t{1} << n); ++wm) {
          if (static_cast<std::size_t>(__builtin_popcountll(wm)) != n - complement) continue;
          std::vector<std::size_t> V, W;
          for (std::size_t i = 0; i < n; ++i) {
            if (vm >> i & 1) V.push_back(i);
            if (wm >> i & 1) W.push_back(i);
          }
          const auto it = tally.find({vm, wm});
          const BigInt count = it == tally.end() ? BigInt(0) : it->second.count;
          const BigInt signed_sum = it == tally.end() ? BigInt(0) : it->second.signed_sum;
          const BigInt det = det_exact(minor_matrix(l, W, V));
          const int sign = sign_of_minor(g, V, W);
          const BigInt parity_sign = (std::accumulate(V.begin(), V.end(), std::size_t{0}) +
                                      std::accumulate(W.begin(), W.end(), std::size_t{0})) % 2 == 0 ? 1 : -1;
          const bool signed_ok = det == parity_sign * signed_sum;
          if (!signed_ok) ++signed_failures;
          if (abs(det) != count) ++magnitude_failures;
          stream_line(o, out, t,
                      {{"suite", "matrix-tree"},
                       {"graph", gj},
                       {"V", V},
                       {"W", W},
                       {"det", io::int_to_json(det)},
                       {"forests", io::int_to_json(count)},
                       {"sign", sign},
                       {"signed_forest_sum", io::int_to_json(signed_sum)},
                       {"signed_identity", signed_ok}},
                      det == sign * count);
        }
      }
    }
  }
  return {{"magnitude_failures", magnitude_failures}, {"signed_identity_failures", signed_failures}};
}

json verify_inverse_entry(const Options& o, std::ostream& out, VerifyTally& t) {
  for (const auto& g : verify_family(o.max_vertices)) {
    const ReducedLaplacian lap(g);
    const auto gj = io::graph_to_json(g);
    for (std::size_t i = 0; i < g.non_sink_count(); ++i)
      for (std::size_t j = 0; j < g.non_sink_count(); ++j) {
        const auto s2 = count_S2(g, g.vertex_at(i), g.vertex_at(j));
        const Rational scaled = lap.inverse()(i, j) * Rational(lap.det());
        stream_line(o, out, t,
                    {{"suite", "inverse-entry"},
                     {"graph", gj},
                     {"v", g.vertex_at(i)},
                     {"w", g.vertex_at(j)},
                     {"entry", to_string(lap.inverse()(i, j))},
                     {"det", io::int_to_json(lap.det())},
                     {"forests", io::int_to_json(s2)}},
                    scaled == Rational(s2));
      }
  }
  return json::object();
}

json verify_closed_forms(const Options& o, std::ostream& out, VerifyTally& t) {
  auto line = [&](const std::string& form, std::size_t n, bool ok) {
    stream_line(o, out, t, {{"suite", "closed-forms"}, {"form", form}, {"n", n}}, ok);
  };
  for (std::size_t n = 1; n <= 10; ++n)
    line("path_inverse", n, path_inverse(n) * to_rational(reduced_laplacian(path(n + 1))) == RatMatrix::identity(n));
  for (std::size_t n = 2; n <= 10; ++n)
    line("complete_inverse", n,
         complete_inverse(n) * to_rational(reduced_laplacian(complete(n + 1))) == RatMatrix::identity(n));
  for (std::size_t n = 3; n <= 12; ++n)
    line("wheel_inverse", n, wheel_inverse(n) * to_rational(reduced_laplacian(wheel(n + 1))) == RatMatrix::identity(n));
  // Enumeration checks are bounded by --max-vertices (graph vertex count).
  const std::size_t cap = std::max<std::size_t>(o.max_vertices, 4);
  for (std::size_t n = 3; n + 1 <= cap; ++n)
    line("wheel_tree_count", n, wheel_tree_count(n) == count_spanning_trees(wheel(n + 1)));
  for (std::size_t k = 2; k + 1 <= cap; ++k)
    line("cone_path_tree_count", k, cone_path_tree_count(k) == count_spanning_trees(cone(path(k))));
  for (std::size_t n = 1; n + 1 <= cap; ++n)
    line("cayley_count", n, cayley_count(n) == count_spanning_trees(complete(n + 1)));
  return json::object();
}

int cmd_verify(const Options& o) {
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + o.out + "'");
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  VerifyTally t;
  json extra;
  if (o.suite == "matrix-tree") extra = verify_matrix_tree(o, out, t);
  else if (o.suite == "inverse-entry") extra = verify_inverse_entry(o, out, t);
  else if (o.suite == "closed-forms") extra = verify_closed_forms(o, out, t);
  else throw UsageError("unknown suite '" + o.suite + "'");
  json summary = {{"suite", o.suite}, {"summary", true}, {"checks", t.checks}, {"failures", t.failures}};
  summary.update(extra);
  out << summary.dump() << "\n";
  std::cerr << o.suite << ": " << t.checks - t.failures << "/" << t.checks << " checks pass\n";
  return 0;
}

void add_graph_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "Graph family, e.g. wheel:5 or cone:cycle:4");
  sub->add_option("--graph", o.graph_file, "Graph JSON file");
  sub->add_option("--fixture", o.fixture, "Named worked example; checks the recorded output");
  sub->add_option("--out", o.out, "Write the JSON report to this file");
}

void add_sandpile_option(CLI::App* sub, Options& o) {
  sub->add_option("--sandpile", o.sandpile, "Comma-separated values or a sandpile JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sandpile stabilization, odometers, and immutability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto* gen = app.add_subcommand("gen", "Emit a graph in JSON edge-list form");
  add_graph_options(gen, o);

  auto* info = app.add_subcommand("info", "Describe a graph, or list families, groups, and fixtures");
  add_graph_options(info, o);

  auto* stab = app.add_subcommand("stabilize", "Stabilize a sandpile by chip-firing");
  add_graph_options(stab, o);
  add_sandpile_option(stab, o);

  auto* odo = app.add_subcommand("odometer", "G-odometer for G = Z, R, or (1/m)Z");
  add_graph_options(odo, o);
  add_sandpile_option(odo, o);
  odo->add_option("--group", o.group, "z | r | q:m")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Decide immutability");
  add_graph_options(cls, o);
  add_sandpile_option(cls, o);

  auto* survey = app.add_subcommand("survey", "Count immutable and mutable sandpiles in a box");
  add_graph_options(survey, o);
  survey->add_option("--box", o.box, "lo:hi, bounds are integers or d, d+k, d-k; comma-separate per vertex")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check structural identities against enumeration (JSON lines)");
  verify->add_option("--suite", o.suite, "matrix-tree | inverse-entry | closed-forms")
      ->required()
      ->check(CLI::IsMember({"matrix-tree", "inverse-entry", "closed-forms"}));
  verify->add_option("--max-vertices", o.max_vertices, "Largest graph size to enumerate")->capture_default_str();
  verify->add_flag("--failures-only", o.failures_only, "Only print failing checks and the summary");
  verify->add_option("--out", o.out, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*info) return cmd_info(o);
    if (*stab) return cmd_stabilize(o);
    if (*odo) return cmd_odometer(o);
    if (*cls) return cmd_classify(o);
    if (*survey) return cmd_survey(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const FixtureMismatch& e) {
    std::cout << json{{"error", "FixtureMismatch"}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
