// xorsym command line front end.
//
// Exit codes: 0 success, 2 unusable input (file parse or usage), 3 a size
// budget was exceeded, 4 a cross-check or verification mismatch (never
// silent; this always indicates a bug).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xorsym/errors.hpp"
#include "xorsym/families.hpp"
#include "xorsym/gadgets.hpp"
#include "xorsym/obdd.hpp"
#include "xorsym/oracle.hpp"
#include "xorsym/space.hpp"
#include "xorsym/symmetry.hpp"
#include "xorsym/truth_table.hpp"

namespace {

using namespace xorsym;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
  std::string circuit_path;
  std::string bdd_path;
  std::string table_path;
  std::string order;
  bool check = false;
  std::size_t cap = kDefaultOracleCap;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string shift;
  std::string out_path;
  std::string circuit_out_path;
  bool strict = false;
  std::string family;
  std::size_t n_max = 64;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw parse_error(0, "cannot open " + cfg.out_path + " for writing");
  out << text;
}

std::vector<std::string> split_order(const std::string& list) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  names.push_back(cur);
  return names;
}

int require_one_input(const RunConfig& cfg, bool allow_table) {
  int given = 0;
  given += cfg.circuit_path.empty() ? 0 : 1;
  given += cfg.bdd_path.empty() ? 0 : 1;
  given += cfg.table_path.empty() ? 0 : 1;
  if (given != 1) {
    std::cerr << "error: exactly one input representation must be given\n";
    return kExitParse;
  }
  if (!allow_table && !cfg.table_path.empty()) {
    std::cerr << "error: this command does not accept --table input\n";
    return kExitParse;
  }
  if (!cfg.order.empty() && cfg.circuit_path.empty()) {
    std::cerr << "error: --order is only valid with --circuit input\n";
    return kExitParse;
  }
  return kExitOk;
}

// Basis and evaluable for a circuit or BDD input; basis coordinates follow
// the circuit's declaration order resp. the BDD's variable order.
struct Analysis {
  Subspace basis;
  Evaluable fn;
};

Analysis analyze_input(const RunConfig& cfg) {
  if (!cfg.circuit_path.empty()) {
    Circuit c = Circuit::parse(read_file(cfg.circuit_path));
    const std::vector<std::string> order =
        cfg.order.empty() ? c.input_names() : split_order(cfg.order);
    Subspace basis = circuit_symmetry_basis(c, order);
    return Analysis{std::move(basis), make_evaluable(std::move(c))};
  }
  Obdd d = Obdd::parse(read_file(cfg.bdd_path));
  Subspace basis = symmetry_basis(d);
  return Analysis{std::move(basis), make_evaluable(std::move(d))};
}

int cross_check(const RunConfig& cfg, const Analysis& a) {
  if (!cfg.check) return kExitOk;
  if (a.fn.arity > cfg.cap) {
    std::cerr << "error: --check requested but arity " << a.fn.arity << " exceeds oracle cap "
              << cfg.cap << "\n";
    return kExitResource;
  }
  if (brute_force_space(a.fn, cfg.cap) != a.basis) {
    std::cerr << "error: check mismatch: oracle basis differs from the computed basis\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_basis(const RunConfig& cfg) {
  if (const int rc = require_one_input(cfg, false); rc != kExitOk) return rc;
  const Analysis a = analyze_input(cfg);
  write_output(cfg, emit_basis(a.basis));
  return cross_check(cfg, a);
}

int cmd_decide(const RunConfig& cfg) {
  if (const int rc = require_one_input(cfg, false); rc != kExitOk) return rc;
  const Analysis a = analyze_input(cfg);
  write_output(cfg, a.basis.dim() > 0 ? "yes\n" : "no\n");
  return cross_check(cfg, a);
}

int cmd_oracle(const RunConfig& cfg) {
  if (const int rc = require_one_input(cfg, true); rc != kExitOk) return rc;
  Evaluable fn;
  if (!cfg.circuit_path.empty())
    fn = make_evaluable(Circuit::parse(read_file(cfg.circuit_path)));
  else if (!cfg.bdd_path.empty())
    fn = make_evaluable(Obdd::parse(read_file(cfg.bdd_path)));
  else
    fn = make_evaluable(TruthTable::parse(read_file(cfg.table_path)));
  write_output(cfg, emit_basis(brute_force_space(fn, cfg.cap)));
  return kExitOk;
}

int cmd_gen_simon(const RunConfig& cfg) {
  const BitVec shift = BitVec::parse(cfg.shift);
  if (cfg.n != shift.size()) {
    std::cerr << "error: --s length must equal --n\n";
    return kExitParse;
  }
  const SimonInstance inst = cfg.strict
                                 ? simon_instance_exact(cfg.n, shift, cfg.seed, 64, cfg.cap)
                                 : simon_instance(cfg.n, shift, cfg.seed, cfg.cap);
  write_output(cfg, inst.table.emit());
  if (!cfg.circuit_out_path.empty()) {
    std::ofstream out(cfg.circuit_out_path, std::ios::binary);
    if (!out) throw parse_error(0, "cannot open " + cfg.circuit_out_path + " for writing");
    out << circuit_from_table(inst.table).emit();
  }
  return kExitOk;
}

int cmd_gen_hardness(const RunConfig& cfg) {
  const Circuit c = Circuit::parse(read_file(cfg.circuit_path));
  write_output(cfg, hardness_reduction(c).transformed.emit());
  return kExitOk;
}

double median_millis(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

int cmd_bench(const RunConfig& cfg) {
  if (cfg.family != "xor-chain" && cfg.family != "linear-map") {
    std::cerr << "error: unknown family " << cfg.family << "\n";
    return kExitParse;
  }
  std::vector<std::size_t> sweep;
  for (std::size_t n = 8; n <= cfg.n_max; n *= 2) sweep.push_back(n);
  if (sweep.empty()) sweep.push_back(std::max<std::size_t>(2, cfg.n_max));

  std::ostringstream report;
  for (std::size_t n : sweep) {
    Circuit c(std::vector<std::string>{});
    Subspace expected(n);
    if (cfg.family == "xor-chain") {
      c = xor_chain_circuit(n);
      BitVec ones(n);
      for (std::size_t i = 0; i < n; ++i) ones.set(i, true);
      expected = Subspace::span({ones}, n);
    } else {
      const std::size_t m = std::min<std::size_t>(8, std::max<std::size_t>(1, n / 2));
      const std::vector<BitVec> rows = random_matrix(m, n, cfg.seed + n);
      c = linear_map_circuit(rows, n);
      expected = kernel(rows, n);
    }
    const Obdd d = compile(c, c.input_names());

    constexpr int kReps = 7;
    std::vector<double> samples;
    Subspace basis(n);
    for (int rep = 0; rep < kReps; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      basis = symmetry_basis(d);
      const auto t1 = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    if (basis != expected) {
      std::cerr << "error: bench verification mismatch at n=" << n << "\n";
      return kExitMismatch;
    }
    char line[128];
    std::snprintf(line, sizeof line, "%zu %zu %.3f %zu\n", n, d.num_internal_nodes(),
                  median_millis(samples), basis.dim());
    report << line;
  }
  write_output(cfg, report.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xorsym: XOR-shift symmetries of boolean functions"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_input_opts = [&cfg](CLI::App* sub, bool with_table) {
    sub->add_option("--circuit", cfg.circuit_path, "circuit file input");
    sub->add_option("--bdd", cfg.bdd_path, "ordered BDD file input");
    if (with_table) sub->add_option("--table", cfg.table_path, "truth table file input");
    sub->add_option("--cap", cfg.cap, "oracle arity cap");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
  };

  CLI::App* basis = app.add_subcommand("basis", "basis of the invariant-shift space");
  add_input_opts(basis, false);
  basis->add_option("--order", cfg.order, "comma-separated variable order (circuit input only)");
  basis->add_flag("--check", cfg.check, "cross-validate against the brute-force oracle");

  CLI::App* decide = app.add_subcommand("decide", "is there a nonzero invariant shift");
  add_input_opts(decide, false);
  decide->add_option("--order", cfg.order, "comma-separated variable order (circuit input only)");
  decide->add_flag("--check", cfg.check, "cross-validate against the brute-force oracle");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force basis, any representation");
  add_input_opts(oracle, true);

  CLI::App* gen_simon = app.add_subcommand("gen-simon", "hidden-shift instance generator");
  gen_simon->add_option("--n", cfg.n, "arity")->required();
  gen_simon->add_option("--s", cfg.shift, "hidden shift bit string")->required();
  gen_simon->add_option("--seed", cfg.seed, "generator seed");
  gen_simon->add_option("--cap", cfg.cap, "arity cap");
  gen_simon->add_option("--out", cfg.out_path, "table output file (default stdout)");
  gen_simon->add_option("--circuit-out", cfg.circuit_out_path, "also write a circuit form");
  gen_simon->add_flag("--strict", cfg.strict, "redraw until the invariant space has dimension 1");

  CLI::App* gen_hardness = app.add_subcommand("gen-hardness", "satisfiability gadget generator");
  gen_hardness->add_option("--circuit", cfg.circuit_path, "single-output source circuit")->required();
  gen_hardness->add_option("--out", cfg.out_path, "output file (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "timing sweep over an instance family");
  bench->add_option("--family", cfg.family, "xor-chain or linear-map")->required();
  bench->add_option("--n-max", cfg.n_max, "largest arity in the sweep");
  bench->add_option("--seed", cfg.seed, "matrix seed (linear-map)");
  bench->add_option("--out", cfg.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (basis->parsed()) return cmd_basis(cfg);
    if (decide->parsed()) return cmd_decide(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (gen_simon->parsed()) return cmd_gen_simon(cfg);
    if (gen_hardness->parsed()) return cmd_gen_hardness(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
