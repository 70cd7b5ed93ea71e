// Acceptance suite: one self-contained check per shipped guarantee, one
// pass/fail line each. Returns the number of failed checks.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {

using namespace xorsym;
using Clock = std::chrono::steady_clock;

struct Failure {
  std::string message;
};

void require(bool cond, const std::string& message) {
  if (!cond) throw Failure{message};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. The worked three-variable example, exact: basis {101}, intermediate
//    witnesses (1) and (0,1), in under a second.

void criterion_worked_example(std::string& detail) {
  const auto start = Clock::now();
  const SymmetryAnalysis an = analyze_symmetries(Obdd::parse(testsup::kExampleBddText));

  require(an.basis == Subspace::span({BitVec::parse("101")}, 3),
          "basis is not exactly {101}");
  require(an.basis.dim() == 1, "dimension is not 1");

  const auto by_level = an.reduced.nodes_by_level();
  require(by_level[3].size() == 2 && by_level[2].size() == 2, "unexpected level widths");
  const AffineSpace& bottom = an.witness(by_level[3][0], by_level[3][1]);
  require(!bottom.is_empty() && bottom.offset() == BitVec::parse("1"),
          "bottom-level witness is not (1)");
  const AffineSpace& middle = an.witness(by_level[2][0], by_level[2][1]);
  require(!middle.is_empty() && middle.offset() == BitVec::parse("01"),
          "middle-level witness is not (0,1)");

  const double secs = seconds_since(start);
  require(secs < 1.0, "took " + std::to_string(secs) + "s, limit 1s");
  detail = "basis 101, witnesses (1) and (01)";
}

// ---------------------------------------------------------------------------
// 2. Oracle equivalence on 500 random circuits, n in 2..8, random gate mixes
//    and variable orders; zero mismatches, under five minutes.

void criterion_oracle_equivalence(std::string& detail) {
  const auto start = Clock::now();
  std::mt19937_64 rng(0xACCE97ull);
  const int kRuns = 500;
  for (int t = 0; t < kRuns; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const Circuit c = testsup::random_circuit(rng, n, 2 + rng() % 16, 1 + rng() % 3);
    const std::vector<std::string> order = testsup::random_order(rng, c);
    const Subspace fast = circuit_symmetry_basis(c, order);
    const Subspace slow = brute_force_space(make_evaluable(c));
    require(fast == slow, "mismatch at run " + std::to_string(t));
  }
  const double secs = seconds_since(start);
  require(secs < 300.0, "took " + std::to_string(secs) + "s, limit 300s");
  std::ostringstream d;
  d << kRuns << " circuits, " << secs << "s";
  detail = d.str();
}

// ---------------------------------------------------------------------------
// 3. Satisfiability gadget: unsat(C) iff the transform has a nonzero
//    invariant shift, on an exhaustive three-clause CNF family over three
//    variables plus 200 random four-input circuits, via the oracle AND the
//    BDD pipeline; for unsat sources the selector-only shift is present.

Circuit cnf_circuit(const std::vector<std::vector<int>>& clauses, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
  Circuit c(names);
  std::vector<Circuit::Signal> negs(n, Circuit::npos_signal);
  const auto lit = [&](int v) {
    const std::size_t var = static_cast<std::size_t>(std::abs(v)) - 1;
    if (v > 0) return c.input(var);
    if (negs[var] == Circuit::npos_signal)
      negs[var] = c.add_gate("n" + std::to_string(var + 1), GateOp::Not, {c.input(var)});
    return negs[var];
  };
  std::vector<Circuit::Signal> clause_sigs;
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    const auto& cl = clauses[k];
    Circuit::Signal s;
    if (cl.size() == 1) {
      s = lit(cl[0]);
    } else {
      std::vector<Circuit::Signal> lits;
      for (int v : cl) lits.push_back(lit(v));
      s = c.add_gate("c" + std::to_string(k + 1), GateOp::Or, lits);
    }
    clause_sigs.push_back(s);
  }
  Circuit::Signal out;
  if (clause_sigs.size() == 1)
    out = c.add_gate("f", GateOp::And, {clause_sigs[0], clause_sigs[0]});
  else
    out = c.add_gate("f", GateOp::And, clause_sigs);
  c.mark_output(out);
  return c;
}

void check_theorem_instance(const Circuit& c, std::size_t& unsat_count) {
  const HardnessInstance inst = hardness_reduction(c);
  const bool unsat = testsup::is_unsatisfiable(c);
  if (unsat) ++unsat_count;
  const Subspace via_oracle = brute_force_space(make_evaluable(inst.transformed));
  const Subspace via_bdd =
      circuit_symmetry_basis(inst.transformed, inst.transformed.input_names());
  require(via_oracle == via_bdd, "oracle and BDD pipeline disagree");
  require(unsat == (via_oracle.dim() > 0), "unsat(C) does not match dim V > 0");
  if (unsat) {
    BitVec selector_only(inst.transformed.num_inputs());
    selector_only.set(0, true);
    require(via_oracle.contains(selector_only), "selector-only shift missing for unsat source");
  }
}

void criterion_hardness_gadget(std::string& detail) {
  const auto start = Clock::now();

  // all clauses over exactly three variables with 1..3 distinct literals
  std::vector<std::vector<int>> clauses;
  for (int a = 1; a <= 3; ++a)
    for (int sa : {+1, -1}) clauses.push_back({sa * a});
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      for (int sa : {+1, -1})
        for (int sb : {+1, -1}) clauses.push_back({sa * a, sb * b});
  for (int sa : {+1, -1})
    for (int sb : {+1, -1})
      for (int sc : {+1, -1}) clauses.push_back({sa * 1, sb * 2, sc * 3});

  std::size_t instances = 0;
  std::size_t unsat_count = 0;
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (std::size_t j = i; j < clauses.size(); ++j)
      for (std::size_t k = j; k < clauses.size(); ++k) {
        check_theorem_instance(cnf_circuit({clauses[i], clauses[j], clauses[k]}, 3),
                               unsat_count);
        ++instances;
      }

  std::mt19937_64 rng(0x7E02Ellu);
  std::size_t random_instances = 0;
  for (int t = 0; t < 200; ++t) {
    const Circuit c = testsup::random_circuit(rng, 4, 2 + rng() % 10, 1);
    check_theorem_instance(c, unsat_count);
    ++random_instances;
  }

  const double secs = seconds_since(start);
  require(secs < 600.0, "took " + std::to_string(secs) + "s, limit 600s");
  require(unsat_count > 0, "the corpus exercised no unsatisfiable source");
  std::ostringstream d;
  d << instances << " CNF + " << random_instances << " random instances, " << unsat_count
    << " unsat, " << secs << "s";
  detail = d.str();
}

// ---------------------------------------------------------------------------
// 4. Padding semantics: an ignored variable must come out free. Fails under
//    zero-padded subspaces, passes under free-coordinate extension.

void criterion_padding_regression(std::string& detail) {
  const Circuit c = Circuit::parse(
      "inputs p q r\n"
      "x = XOR p q\n"
      "o = NOT x\n"
      "outputs o\n");
  const Subspace expected = Subspace::span({BitVec::parse("110"), BitVec::parse("001")}, 3);
  const Subspace basis = circuit_symmetry_basis(c, {"p", "q", "r"});
  require(basis.dim() == 2, "dimension is not 2");
  require(basis == expected, "basis is not {110, 001}");
  require(basis == brute_force_space(make_evaluable(c)), "oracle disagrees");
  detail = "dim 2, rows 110 and 001";
}

// ---------------------------------------------------------------------------
// 5. Linear maps: for 50 random GF(2) matrices the computed basis equals the
//    independently eliminated null space, exactly.

void criterion_linear_family(std::string& detail) {
  const auto start = Clock::now();
  std::mt19937_64 rng(0x11EA12ull);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 15;  // up to 16
    const std::size_t m = 1 + rng() % 8;
    const std::vector<BitVec> rows = testsup::random_matrix(m, n, rng());
    const Circuit c = linear_map_circuit(rows, n);
    const Subspace basis = circuit_symmetry_basis(c, c.input_names());
    require(basis == kernel(rows, n), "basis differs from the null space at run " +
                                          std::to_string(t));
  }
  std::ostringstream d;
  d << "50 matrices, " << seconds_since(start) << "s";
  detail = d.str();
}

// ---------------------------------------------------------------------------
// 6. Scaling sanity through the command line: the xor-chain sweep up to 64
//    variables finishes in under ten seconds with dimension-1 answers, and
//    the time column grows no faster than cubically (x4 slack, 0.05 ms
//    noise floor).

struct BenchLine {
  std::size_t n;
  std::size_t nodes;
  double millis;
  std::size_t dim;
};

void criterion_scaling(std::string& detail) {
  const auto start = Clock::now();
  const std::string cmd = std::string(XORSYM_CLI_PATH) + " bench --family xor-chain --n-max 64";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "cannot launch the CLI");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const double secs = seconds_since(start);
  require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "bench exited nonzero");
  require(secs < 10.0, "took " + std::to_string(secs) + "s, limit 10s");

  std::vector<BenchLine> lines;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    BenchLine b{};
    std::istringstream ls(line);
    require(static_cast<bool>(ls >> b.n >> b.nodes >> b.millis >> b.dim), "bad bench line");
    lines.push_back(b);
  }
  require(lines.size() == 4, "expected the sweep 8,16,32,64");
  for (const BenchLine& b : lines) require(b.dim == 1, "dimension is not 1 in the sweep");

  const double floor_ms = 0.05;  // keeps sub-scheduler-tick noise out of the fit
  const double t8 = std::max(lines.front().millis, floor_ms);
  for (const BenchLine& b : lines) {
    const double ratio = static_cast<double>(b.n) / lines.front().n;
    const double bound = 4.0 * t8 * ratio * ratio * ratio;
    require(std::max(b.millis, floor_ms) <= bound,
            "time at n=" + std::to_string(b.n) + " exceeds the cubic bound");
  }
  std::ostringstream d;
  d << "n=64 in " << lines.back().millis << " ms, sweep " << secs << "s";
  detail = d.str();
}

// ---------------------------------------------------------------------------
// 7. Generators and search: 100 seeded hidden-shift draws contain their
//    shift; decision-driven search returns a nonzero member within n calls.

void criterion_generator_and_search(std::string& detail) {
  const auto start = Clock::now();
  std::mt19937_64 rng(0x51A40Eull);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 7;  // up to 8
    BitVec s = testsup::random_vec(rng, n);
    if (s.is_zero()) s.set(rng() % n, true);
    const SimonInstance inst = simon_instance(n, s, rng());
    const Evaluable fn = make_evaluable(inst.table);
    const Subspace space = brute_force_space(fn);
    require(space.contains(s), "planted shift missing at run " + std::to_string(t));
    require(space.dim() >= 1, "space unexpectedly trivial");

    std::size_t calls = 0;
    const BitVec found = search_via_decision(
        [&fn, &calls](const std::vector<std::uint8_t>& prefix) {
          ++calls;
          return brute_force_decide(fn, prefix);
        },
        n);
    require(calls <= n, "more than n decision calls");
    require(!found.is_zero(), "search returned zero");
    require(space.contains(found), "search returned a non-member");
  }
  std::ostringstream d;
  d << "100 draws, " << seconds_since(start) << "s";
  detail = d.str();
}

// ---------------------------------------------------------------------------
// 8. Algebra: the dimension law on 1000 random subspace pairs (ambient up to
//    24), coset-enumeration agreement for the affine intersection (ambient up
//    to 10), and group structure of 100 oracle runs.

void criterion_algebra(std::string& detail) {
  const auto start = Clock::now();
  std::mt19937_64 rng(0xA19E8Aull);

  for (int t = 0; t < 1000; ++t) {
    const std::size_t ambient = 1 + rng() % 24;
    const Subspace a = testsup::random_subspace(rng, ambient, rng() % (ambient + 1));
    const Subspace b = testsup::random_subspace(rng, ambient, rng() % (ambient + 1));
    require(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim(),
            "dimension law failed at pair " + std::to_string(t));
  }

  for (int t = 0; t < 300; ++t) {
    const std::size_t ambient = 1 + rng() % 10;
    const AffineSpace a(testsup::random_vec(rng, ambient),
                        testsup::random_subspace(rng, ambient, rng() % 5));
    const AffineSpace b(testsup::random_vec(rng, ambient),
                        testsup::random_subspace(rng, ambient, rng() % 5));
    const auto expected =
        testsup::set_intersection(testsup::member_set(a), testsup::member_set(b));
    require(testsup::member_set(intersect(a, b)) == expected,
            "affine intersection disagrees with enumeration at pair " + std::to_string(t));
  }

  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const Circuit c = testsup::random_circuit(rng, n, 1 + rng() % 12, 1 + rng() % 3);
    const std::vector<BitVec> members = brute_force_members(make_evaluable(c));
    const Subspace space = brute_force_space(make_evaluable(c));
    require(members.size() == (std::size_t{1} << space.dim()), "member count is not 2^dim");
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j)
        require(space.contains(members[i] + members[j]), "member set not closed under +");
  }

  std::ostringstream d;
  d << "1000 pairs + 300 cosets + 100 oracle runs, " << seconds_since(start) << "s";
  detail = d.str();
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example, exact", criterion_worked_example},
      {2, "oracle equivalence, 500 circuits", criterion_oracle_equivalence},
      {3, "satisfiability gadget", criterion_hardness_gadget},
      {4, "free-padding regression", criterion_padding_regression},
      {5, "linear-map null spaces", criterion_linear_family},
      {6, "polynomial-scaling sanity", criterion_scaling},
      {7, "generator and search", criterion_generator_and_search},
      {8, "algebraic property suite", criterion_algebra},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run(detail);
    } catch (const Failure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(start);
    std::printf("[%d] %-36s %s  (%s; %.2fs)\n", c.id, c.name, ok ? "PASS" : "FAIL",
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed;
}
