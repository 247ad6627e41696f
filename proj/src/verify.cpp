#include "icsi/verify.hpp"

#include <map>
#include <set>
#include <sstream>

#include "icsi/kernels.hpp"

namespace icsi::verify {

namespace {

using kernels::Mask;

std::string describe(const Matrix& g) {
  std::ostringstream os;
  os << g.f().name() << " G=[";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < g.cols(); ++c) os << (c ? " " : "") << g(r, c);
  }
  os << "]";
  return os.str();
}

std::string describe(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i] + 1;
  os << "}";
  return os.str();
}

std::string describe(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void record(SuiteResult& res, const std::string& what) {
  if (res.violations++ == 0) res.counterexample = what;
}

Vector random_vector(SplitMix64& rng, const FieldRef& field, std::size_t n) {
  Vector v(field, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<elem_t>(rng.below(field->order()));
  return v;
}

KnownValues restrict(const Vector& x, std::span<const std::size_t> idx) {
  KnownValues kv;
  for (std::size_t i : idx) kv[i] = x[i];
  return kv;
}

std::uint64_t power(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

// The code under test and the code the expectations come from. They differ
// only in corrupt mode.
struct Fixture {
  std::string name;
  LinearCode reference;
  LinearCode subject;
};

LinearCode mutate(const LinearCode& code) {
  Matrix g = code.generator();
  const std::size_t last = g.cols() - 1;
  g(0, last) = g.f().add(g(0, last), 1);
  return LinearCode::from_generator(g);
}

std::vector<Fixture> fixtures(const VerifyOptions& opt) {
  std::vector<Fixture> out;
  for (auto& e : builtin_corpus(opt.seed, opt.random_codes)) {
    LinearCode subject = opt.corrupt && e.name == "hamming-7-4" ? mutate(e.code) : e.code;
    out.push_back({e.name, e.code, std::move(subject)});
  }
  return out;
}

// Compares the algebraic verdict on `subject` with the oracle on `reference`
// for every query of the code; observations come from `xs`.
void compare_all_queries(const LinearCode& subject, const LinearCode& reference, const std::vector<Vector>& xs,
                         SuiteResult& res, const std::string& label) {
  const std::size_t n = reference.length();
  const Mask all = (Mask{1} << n) - 1;
  for (std::size_t t = 0; t < n; ++t) {
    for (Mask known : kernels::subsets_of_size(n, t)) {
      const Mask unknown = all & ~known;
      // every nonempty sub-mask of the unknown set
      for (Mask block = unknown; block != 0; block = (block - 1) & unknown) {
        SecurityQuery query{kernels::mask_indices(known), kernels::mask_indices(block)};
        const bool algebraic = has_no_information(subject, query);
        for (const Vector& x : xs) {
          ++res.cases;
          const Vector s = multiply(reference.generator(), x);
          const bool oracle = entropy_oracle(reference, query, restrict(x, query.known), s).uniform;
          if (algebraic != oracle) {
            record(res, label + " " + describe(subject.generator()) + " X_A=" + describe(query.known) +
                            " B=" + describe(query.block) + " x=" + describe(x) + " algebraic=" +
                            (algebraic ? "hidden" : "leaks") + " oracle=" + (oracle ? "uniform" : "skewed"));
            break;
          }
        }
      }
    }
  }
}

SuiteResult suite_singleton(const VerifyOptions& opt) {
  SuiteResult res{"thm1", 0, 0, {}};
  for (const auto& fx : fixtures(opt)) {
    ++res.cases;
    const std::size_t n = fx.reference.length();
    const std::size_t k = fx.reference.dimension();
    const std::size_t d = min_distance(fx.subject);
    if (d > n - k + 1)
      record(res, fx.name + " " + describe(fx.subject.generator()) + " d=" + std::to_string(d) + " > n-k+1=" +
                      std::to_string(n - k + 1));
    // fixtures with textbook parameters
    const std::map<std::string, std::size_t> known_d{{"repetition-3-1", 3}, {"hamming-7-4", 3}, {"rs-7-3-gf8", 5}};
    if (const auto it = known_d.find(fx.name); it != known_d.end() && d != it->second)
      record(res, fx.name + " " + describe(fx.subject.generator()) + " d=" + std::to_string(d) + ", expected " +
                      std::to_string(it->second));
  }
  return res;
}

SuiteResult suite_orthogonal_array(const VerifyOptions& opt) {
  SuiteResult res{"thm2", 0, 0, {}};
  for (const auto& fx : fixtures(opt)) {
    const std::size_t n = fx.reference.length();
    const std::size_t k = fx.reference.dimension();
    const std::uint32_t q = fx.reference.field()->order();
    const std::size_t strength = std::min(dual_distance(fx.reference) - 1, n);
    for (std::size_t r = 1; r <= strength; ++r) {
      const std::uint64_t expected = power(q, k - r);
      for (Mask cols : kernels::subsets_of_size(n, r)) {
        ++res.cases;
        const auto idx = kernels::mask_indices(cols);
        const TupleCounts tc = oa_tuple_counts(fx.subject, idx);
        for (std::size_t t = 0; t < tc.counts.size(); ++t) {
          if (tc.counts[t] != expected) {
            record(res, fx.name + " " + describe(fx.subject.generator()) + " columns " + describe(idx) +
                            ": tuple #" + std::to_string(t) + " appears " + std::to_string(tc.counts[t]) +
                            " times, expected " + std::to_string(expected));
            break;
          }
        }
      }
    }
  }
  return res;
}

SuiteResult suite_equivalence(const VerifyOptions& opt) {
  SuiteResult res{"lemma3", 0, 0, {}};
  const FieldRef f2 = Field::make(2);

  // Exhaustive binary part: queries depend on the code only, so each distinct
  // generator is checked once against every observation.
  std::set<std::vector<elem_t>> seen;
  std::vector<LinearCode> distinct;
  for_each_binary_instance(4, 3, f2, [&](const IcsiInstance& inst) {
    for (ChoicePolicy policy : {ChoicePolicy::Indicator, ChoicePolicy::Zero}) {
      std::optional<LinearCode> code;
      try {
        code = build_scheme(inst, default_choice_vectors(inst, policy)).code();
      } catch (const Error& e) {
        if (e.code() != Errc::EmptyInput) throw;
        continue;
      }
      std::vector<elem_t> key(code->generator().data().begin(), code->generator().data().end());
      key.push_back(static_cast<elem_t>(code->length()));
      key.push_back(static_cast<elem_t>(code->dimension()));
      if (seen.insert(key).second) distinct.push_back(*code);
    }
  });
  if (opt.corrupt) distinct.push_back(builtin_corpus(opt.seed, 0)[1].code);
  for (std::size_t c = 0; c < distinct.size(); ++c) {
    const LinearCode& ref = distinct[c];
    const bool mutate_this = opt.corrupt && c + 1 == distinct.size();
    const LinearCode subject = mutate_this ? mutate(ref) : ref;
    std::vector<Vector> xs;
    const std::uint64_t total = power(2, ref.length());
    for (std::uint64_t v = 0; v < total; ++v) {
      Vector x(f2, ref.length());
      for (std::size_t i = 0; i < ref.length(); ++i) x[i] = static_cast<elem_t>((v >> i) & 1U);
      xs.push_back(std::move(x));
    }
    compare_all_queries(subject, ref, xs, res, mutate_this ? "hamming-7-4" : "binary");
  }

  SplitMix64 rng(opt.seed ^ 0x1e33a3ULL);
  const FieldRef f3 = Field::make(3);
  for (std::size_t i = 0; i < opt.random_instances; ++i) {
    const FieldRef& field = rng.below(2) == 0 ? f2 : f3;
    const std::size_t n = 5 + rng.below(2);
    std::optional<LinearCode> code;
    while (!code) {
      const IcsiInstance inst = random_instance(rng, n, field);
      const auto which = rng.below(3);
      const ChoiceVectors cv = which == 0   ? default_choice_vectors(inst, ChoicePolicy::Indicator)
                               : which == 1 ? default_choice_vectors(inst, ChoicePolicy::Zero)
                                            : random_choice_vectors(rng, inst);
      try {
        code = build_scheme(inst, cv).code();
      } catch (const Error& e) {
        if (e.code() != Errc::EmptyInput) throw;
      }
    }
    const std::vector<Vector> xs{random_vector(rng, field, n), random_vector(rng, field, n)};
    compare_all_queries(*code, *code, xs, res, "random#" + std::to_string(i));
  }
  return res;
}

SuiteResult suite_block_security(const VerifyOptions& opt) {
  SuiteResult res{"thm3", 0, 0, {}};
  SplitMix64 rng(opt.seed ^ 0x7b3ULL);
  for (const auto& fx : fixtures(opt)) {
    const std::size_t n = fx.reference.length();
    const std::size_t k = fx.reference.dimension();
    const std::uint32_t q = fx.reference.field()->order();
    const WeightDistribution wd = weight_distribution(fx.reference);
    const std::size_t d = wd.min_nonzero_weight();

    for (const auto& [t, level] : guaranteed_block_levels(d)) {
      ++res.cases;
      const std::size_t measured = block_security_level(fx.subject, t);
      if (measured < level)
        record(res, fx.name + " " + describe(fx.subject.generator()) + " t=" + std::to_string(t) + " measured " +
                        std::to_string(measured) + " < guaranteed " + std::to_string(level));
    }

    for (std::size_t w = 1; w <= n; ++w) {
      if (wd.counts[w] == 0) continue;
      ++res.cases;
      const auto wit = weak_security_witness(fx.subject, w - 1);
      bool ok = wit && wit->confirmed && wit->known.size() == w - 1;
      if (ok) {
        const Vector x = random_vector(rng, fx.reference.field(), n);
        const Vector s = multiply(fx.reference.generator(), x);
        const auto rec = find_recovery(fx.subject, wit->known, wit->exposed);
        ok = rec && apply_recovery(*rec, s, restrict(x, wit->known)) == x[wit->exposed];
      }
      if (!ok) record(res, fx.name + " " + describe(fx.subject.generator()) + " no working witness at t=" + std::to_string(w - 1));
    }

    for (std::size_t t = 0; t + 1 <= d && t < n; ++t) {
      for (int trial = 0; trial < 3; ++trial) {
        ++res.cases;
        const auto known = rng.sample(n, t);
        const Vector x = random_vector(rng, fx.reference.field(), n);
        const AdversaryView view{restrict(x, known), multiply(fx.reference.generator(), x)};
        const std::uint64_t expected = power(q, n - t - k);
        std::string problem;
        try {
          const auto list = list_attack(fx.subject, view);
          if (list.size() != expected)
            problem = "list has " + std::to_string(list.size()) + " entries, expected " + std::to_string(expected);
          else if (std::find(list.begin(), list.end(), x) == list.end())
            problem = "list misses the true x";
        } catch (const Error& e) {
          problem = e.what();
        }
        if (!problem.empty())
          record(res, fx.name + " " + describe(fx.subject.generator()) + " X_A=" + describe(known) + " x=" +
                          describe(x) + ": " + problem);
      }
    }
  }
  return res;
}

SuiteResult suite_complete_insecurity(const VerifyOptions& opt) {
  SuiteResult res{"thm4", 0, 0, {}};
  SplitMix64 rng(opt.seed ^ 0x4a4ULL);
  for (const auto& fx : fixtures(opt)) {
    const std::size_t n = fx.reference.length();
    const std::size_t threshold = n + 1 - dual_distance(fx.reference);
    if (threshold >= n) continue;
    for (Mask known_mask : kernels::subsets_of_size(n, threshold)) {
      ++res.cases;
      const auto known = kernels::mask_indices(known_mask);
      const Vector x = random_vector(rng, fx.reference.field(), n);
      const AdversaryView view{restrict(x, known), multiply(fx.reference.generator(), x)};
      const AttackOutcome out = complete_insecurity_attack(fx.subject, view);
      bool ok = out.complete();
      for (const auto& [i, v] : out.recovered) ok = ok && v == x[i];
      if (!ok)
        record(res, fx.name + " " + describe(fx.subject.generator()) + " X_A=" + describe(known) + " x=" +
                        describe(x) + ": " + std::to_string(out.resisted.size()) + " indices resisted or wrong values");
    }
  }
  return res;
}

}  // namespace

IcsiInstance hamming_instance() {
  const FieldRef f2 = Field::make(2);
  // (X_j, f(j)) 1-based: R1..R7
  const std::vector<std::pair<std::vector<std::size_t>, std::size_t>> table{
      {{6, 7}, 1}, {{5, 7}, 2}, {{5, 6}, 3}, {{5, 6, 7}, 4}, {{1, 2, 6}, 5}, {{1, 3, 4}, 6}, {{2, 3, 6}, 7}};
  std::vector<Receiver> receivers;
  for (const auto& [side, demand] : table) {
    Receiver r;
    for (std::size_t i : side) r.side_info.push_back(i - 1);
    r.demand = demand - 1;
    receivers.push_back(std::move(r));
  }
  return IcsiInstance(f2, 7, std::move(receivers));
}

Scheme reed_solomon_scheme(std::size_t n, std::size_t k, FieldRef field) {
  const LinearCode rs = reed_solomon(n, k, field);
  std::vector<Receiver> receivers;
  ChoiceVectors choice;
  for (std::size_t j = 0; j < k; ++j) {
    Receiver r;
    for (std::size_t i = k; i < n; ++i) r.side_info.push_back(i);
    r.demand = j;
    receivers.push_back(std::move(r));
    Vector v = rs.generator().row_vector(j);
    v[j] = 0;
    choice.push_back(std::move(v));
  }
  return build_scheme(IcsiInstance(field, n, std::move(receivers)), choice);
}

LinearCode random_code(SplitMix64& rng, std::size_t n, std::size_t k, FieldRef field) {
  for (;;) {
    Matrix g(field, k, n);
    bool nonzero = false;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        g(r, c) = static_cast<elem_t>(rng.below(field->order()));
        nonzero = nonzero || g(r, c) != 0;
      }
    if (nonzero) return LinearCode::from_generator(g);
  }
}

IcsiInstance random_instance(SplitMix64& rng, std::size_t n, FieldRef field) {
  const std::size_t m = 1 + rng.below(n);
  std::vector<Receiver> receivers;
  for (std::size_t j = 0; j < m; ++j) {
    Receiver r;
    r.demand = rng.below(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.below(2) == 1) r.side_info.push_back(i);
    receivers.push_back(std::move(r));
  }
  return IcsiInstance(std::move(field), n, std::move(receivers));
}

ChoiceVectors random_choice_vectors(SplitMix64& rng, const IcsiInstance& instance) {
  ChoiceVectors out;
  for (const Receiver& r : instance.receivers()) {
    Vector v(instance.field(), instance.message_count());
    for (std::size_t i : r.side_info) v[i] = static_cast<elem_t>(rng.below(instance.field()->order()));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed, std::size_t random_codes) {
  std::vector<CorpusEntry> out;
  const FieldRef f2 = Field::make(2);
  const std::vector<Vector> ones{Vector(f2, {1, 1, 1})};
  out.push_back({"repetition-3-1", LinearCode::from_rows(ones)});
  const IcsiInstance ham = hamming_instance();
  out.push_back({"hamming-7-4", build_scheme(ham, default_choice_vectors(ham)).code()});
  out.push_back({"rs-7-3-gf8", reed_solomon_scheme(7, 3, Field::make(2, 3)).code()});

  SplitMix64 rng(seed);
  const std::vector<FieldRef> fields{f2, Field::make(3), Field::make(2, 2)};
  for (std::size_t i = 0; i < random_codes; ++i) {
    const FieldRef& field = fields[rng.below(fields.size())];
    const std::size_t n = 2 + rng.below(7);
    const std::size_t k = 1 + rng.below(n);
    out.push_back({"random-" + std::to_string(i), random_code(rng, n, k, field)});
  }
  return out;
}

std::vector<std::string> suite_names() { return {"thm1", "thm2", "lemma3", "thm3", "thm4"}; }

std::vector<SuiteResult> run(std::string_view suite, const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (all || suite == "thm1") out.push_back(suite_singleton(options));
  if (all || suite == "thm2") out.push_back(suite_orthogonal_array(options));
  if (all || suite == "lemma3") out.push_back(suite_equivalence(options));
  if (all || suite == "thm3") out.push_back(suite_block_security(options));
  if (all || suite == "thm4") out.push_back(suite_complete_insecurity(options));
  if (out.empty()) throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace icsi::verify
