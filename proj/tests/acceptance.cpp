// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime budgets are part of each criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "icsi/io.hpp"
#include "icsi/kernels.hpp"
#include "icsi/verify.hpp"

using namespace icsi;

namespace {

// Budgets in seconds.
constexpr double kBudgetExample = 1.0;
constexpr double kBudgetLadder = 5.0;
constexpr double kBudgetEquivalence = 120.0;
constexpr double kBudgetListAttack = 30.0;
constexpr double kBudgetThreshold = 120.0;
constexpr double kBudgetMds = 10.0;
constexpr double kBudgetOrthogonal = 60.0;

constexpr std::uint64_t kSeed = verify::kCorpusSeed;
constexpr int kDecodeTrials = 100;
constexpr int kListTriples = 200;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

Vector random_x(SplitMix64& rng, const FieldRef& f, std::size_t n) {
  Vector x(f, n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<elem_t>(rng.below(f->order()));
  return x;
}

KnownValues restrict(const Vector& x, const std::vector<std::size_t>& idx) {
  KnownValues kv;
  for (std::size_t i : idx) kv[i] = x[i];
  return kv;
}

std::string instance_path(const std::string& name) { return std::string(ICSI_INSTANCE_DIR) + "/" + name; }

Scheme shipped_hamming() {
  const auto loaded = io::load_instance_file(instance_path("hamming7.json"));
  return build_scheme(loaded.instance, loaded.choice);
}

Outcome example_reproduction() {
  Outcome o;
  const Scheme scheme = shipped_hamming();
  const LinearCode& code = scheme.code();
  const std::size_t d = min_distance(code), dd = dual_distance(code);
  if (code.dimension() != 4 || d != 3 || dd != 4)
    fail(o, "k=" + std::to_string(code.dimension()) + " d=" + std::to_string(d) + " d_dual=" + std::to_string(dd));

  const auto& f = code.field();
  const std::vector<std::size_t> r5_side{0, 1, 5};
  const auto r5 = find_recovery(code, r5_side, 4);
  if (!r5 || r5->coefficients != Vector(f, {1, 1, 0, 0}) || r5->confined != Vector(f, {1, 1, 0, 0, 0, 1, 0}))
    fail(o, "R5 recovery is not (s1+s2) - (x1+x2+x6)");

  SplitMix64 rng(kSeed);
  for (int trial = 0; trial < kDecodeTrials && o.ok; ++trial) {
    const Vector x = random_x(rng, f, 7);
    const Vector s = encode(scheme, x);
    for (std::size_t j = 0; j < scheme.instance().receiver_count(); ++j) {
      const Receiver& r = scheme.instance().receiver(j);
      if (decode_receiver(scheme, j, s, restrict(x, r.side_info)) != x[r.demand]) fail(o, "receiver decode mismatch");
    }
    const elem_t by_hand = f->sub(f->add(s[0], s[1]), f->add(f->add(x[0], x[1]), x[5]));
    if (by_hand != x[4]) fail(o, "(s1+s2)-(x1+x2+x6) != x5");
  }
  if (o.ok) o.detail = "k=4 d=3 d_dual=4; 7 receivers x 100 vectors decoded";
  return o;
}

Outcome security_ladder() {
  Outcome o;
  const LinearCode code = shipped_hamming().code();
  const std::size_t b0 = block_security_level(code, 0), b1 = block_security_level(code, 1);
  if (b0 != 2 || b1 != 1) fail(o, "levels t=0:" + std::to_string(b0) + " t=1:" + std::to_string(b1));
  const auto w = weak_security_witness(code, 2);
  if (!w || !w->confirmed || has_no_information(code, {w->known, {w->exposed}})) fail(o, "no working witness at t=2");

  SplitMix64 rng(kSeed + 1);
  std::size_t broken = 0, subsets = 0;
  for (kernels::Mask m : kernels::subsets_of_size(7, 4)) {
    ++subsets;
    const auto known = kernels::mask_indices(m);
    const Vector x = random_x(rng, code.field(), 7);
    const auto out = complete_insecurity_attack(code, {restrict(x, known), multiply(code.generator(), x)});
    bool ok = out.complete() && out.recovered.size() == 3;
    for (const auto& [i, v] : out.recovered) ok = ok && v == x[i];
    broken += ok ? 1 : 0;
  }
  if (subsets != 35 || broken != 35) fail(o, std::to_string(broken) + "/" + std::to_string(subsets) + " four-subsets recovered");
  if (o.ok) o.detail = "t=0 -> 2, t=1 -> 1, witness at t=2, 35/35 four-subsets recover all";
  return o;
}

Outcome from_suite(const std::string& suite, std::size_t random_instances = 1000) {
  verify::VerifyOptions opt;
  opt.seed = kSeed;
  opt.random_instances = random_instances;
  const auto r = verify::run(suite, opt).front();
  Outcome o;
  o.detail = std::to_string(r.cases) + " cases, " + std::to_string(r.violations) + " violations";
  if (!r.passed()) fail(o, o.detail + "; " + r.counterexample);
  return o;
}

Outcome list_attack_sizes() {
  Outcome o;
  const auto corpus = verify::builtin_corpus(kSeed);
  SplitMix64 rng(kSeed + 4);
  int checked = 0;
  while (checked < kListTriples) {
    const auto& code = corpus[rng.below(corpus.size())].code;
    const std::size_t n = code.length(), k = code.dimension(), q = code.field()->order();
    const std::size_t d = min_distance(code);
    const std::size_t t = rng.below(std::min(d - 1, n - 1) + 1);
    const auto known = rng.sample(n, t);
    const Vector x = random_x(rng, code.field(), n);
    const auto list = list_attack(code, {restrict(x, known), multiply(code.generator(), x)});
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < n - t - k; ++i) expected *= q;
    if (list.size() != expected) fail(o, "list of " + std::to_string(list.size()) + ", expected " + std::to_string(expected));
    if (std::find(list.begin(), list.end(), x) == list.end()) fail(o, "true x missing from the list");
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " triples, |list| = q^(n-t-k) and contains x";
  return o;
}

Outcome mds_tightness() {
  Outcome o;
  const LinearCode rs = verify::reed_solomon_scheme(7, 3, Field::make(2, 3)).code();
  const SecurityReport r = security_report(rs);
  if (r.d != 5 || r.dual_d != 4) fail(o, "d=" + std::to_string(r.d) + " d_dual=" + std::to_string(r.dual_d));
  if (r.d - 2 + 1 != r.insecure_from) fail(o, "secure and insecure ranges are not adjacent");
  for (std::size_t t = 0; t <= 3; ++t)
    if (r.strengths[t].measured_block < 4 - t || r.strengths[t].broken_adversaries != 0)
      fail(o, "t=" + std::to_string(t) + " below the guarantee");
  for (std::size_t t = 4; t < 7; ++t)
    if (!r.strengths[t].completely_insecure) fail(o, "t=" + std::to_string(t) + " not completely insecure");
  if (o.ok) o.detail = "d=5 d_dual=4; block-secure for t<=3, completely insecure for t>=4";
  return o;
}

std::string run_analyze(const std::string& threads, const std::string& args) {
  const std::string cmd = "ICSI_SEC_THREADS=" + threads + " " + ICSI_SEC_BINARY + " analyze " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out = "exit " + std::to_string(status);
  return out;
}

Outcome determinism() {
  Outcome o;
  std::size_t bytes = 0;
  for (const std::string args : {instance_path("hamming7.json"), instance_path("rs7_3_f8.json"),
                                 instance_path("large15.json") + " --sample --seed 11"}) {
    const std::string a = run_analyze("1", args), b = run_analyze("4", args);
    if (a.empty() || a.rfind("exit ", 0) == 0 || a != b) fail(o, "reports differ between 1 and 4 workers: " + args);
    bytes += a.size();
  }
  if (o.ok) o.detail = "3 reports, " + std::to_string(bytes) + " bytes identical for 1 and 4 workers";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget;  // seconds, 0 = none
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "example instance reproduction", kBudgetExample, example_reproduction},
      {2, "security ladder", kBudgetLadder, security_ladder},
      {3, "algebraic check vs entropy oracle", kBudgetEquivalence, [] { return from_suite("lemma3"); }},
      {4, "list attack size", kBudgetListAttack, list_attack_sizes},
      {5, "complete-insecurity threshold", kBudgetThreshold, [] { return from_suite("thm4"); }},
      {6, "MDS tightness", kBudgetMds, mds_tightness},
      {7, "orthogonal-array counts", kBudgetOrthogonal, [] { return from_suite("thm2"); }},
      {8, "determinism across worker counts", 0.0, determinism},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) fail(o, "took longer than the budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " (" << secs << " s";
    if (c.budget > 0) line << " / " << c.budget << " s";
    line << "): " << o.detail;
    std::cout << line.str() << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
