#include "icsi/security.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "icsi/kernels.hpp"
#include "icsi/rng.hpp"

namespace icsi {

namespace {

using kernels::Mask;

void check_query(std::size_t n, const SecurityQuery& query) {
  std::set<std::size_t> seen;
  for (std::size_t i : query.known) {
    if (i >= n) throw Error(Errc::IndexOutOfRange, "known index " + std::to_string(i + 1));
    if (!seen.insert(i).second) throw Error(Errc::InvalidArgument, "known index repeated");
  }
  if (query.known.size() >= n) throw Error(Errc::InvalidArgument, "the adversary must miss at least one message");
  if (query.block.empty()) throw Error(Errc::InvalidArgument, "empty block");
  for (std::size_t i : query.block) {
    if (i >= n) throw Error(Errc::IndexOutOfRange, "block index " + std::to_string(i + 1));
    if (!seen.insert(i).second) throw Error(Errc::InvalidArgument, "block overlaps known set or repeats");
  }
}

Mask to_mask(std::span<const std::size_t> indices) {
  Mask m = 0;
  for (std::size_t i : indices) m |= Mask{1} << i;
  return m;
}

std::vector<std::size_t> keys_of(const KnownValues& known) {
  std::vector<std::size_t> out;
  out.reserve(known.size());
  for (const auto& [i, v] : known) out.push_back(i);
  return out;
}

void check_view(const LinearCode& code, const AdversaryView& view) {
  const std::size_t n = code.length();
  if (!same_field(view.broadcast.field(), code.field())) throw Error(Errc::FieldMismatch, "broadcast field");
  if (view.broadcast.size() != code.dimension())
    throw Error(Errc::DimensionMismatch, "broadcast has " + std::to_string(view.broadcast.size()) +
                                             " symbols, expected " + std::to_string(code.dimension()));
  for (const auto& [i, v] : view.known) {
    if (i >= n) throw Error(Errc::IndexOutOfRange, "known index " + std::to_string(i + 1));
    if (!code.field()->contains(v)) throw Error(Errc::InvalidArgument, "known value outside the field");
  }
  if (view.known.size() >= n) throw Error(Errc::InvalidArgument, "the adversary must miss at least one message");
}

std::uint64_t saturating_binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  long double acc = 1;
  for (std::size_t i = 1; i <= r; ++i) acc = acc * static_cast<long double>(n - r + i) / static_cast<long double>(i);
  if (acc > 1e18L) return static_cast<std::uint64_t>(1e18);
  return static_cast<std::uint64_t>(std::llround(acc));
}

Mask random_subset(SplitMix64& rng, std::span<const std::size_t> universe, std::size_t size) {
  Mask m = 0;
  for (std::size_t pos : rng.sample(universe.size(), size)) m |= Mask{1} << universe[pos];
  return m;
}

std::vector<Mask> draw_adversaries(SplitMix64& rng, std::size_t n, std::size_t t, std::size_t samples) {
  if (saturating_binomial(n, t) <= samples) return kernels::subsets_of_size(n, t);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::vector<Mask> out;
  std::set<Mask> seen;
  for (std::size_t s = 0; s < samples; ++s) {
    const Mask m = random_subset(rng, all, t);
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

std::size_t sampled_block_level(const Matrix& g, std::span<const Mask> adversaries, std::size_t cap,
                                std::size_t block_samples, SplitMix64& rng) {
  const std::size_t n = g.cols();
  const Mask all = n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t b = 1; b <= cap; ++b) {
    std::vector<std::pair<Mask, Mask>> queries;
    for (Mask known : adversaries) {
      const auto unknown = kernels::mask_indices(all & ~known);
      if (saturating_binomial(unknown.size(), b) <= block_samples) {
        for (Mask local : kernels::subsets_of_size(unknown.size(), b)) {
          Mask block = 0;
          for (std::size_t j : kernels::mask_indices(local)) block |= Mask{1} << unknown[j];
          queries.emplace_back(known, block);
        }
      } else {
        for (std::size_t s = 0; s < block_samples; ++s) queries.emplace_back(known, random_subset(rng, unknown, b));
      }
    }
    std::vector<unsigned char> hidden(queries.size(), 1);
    const auto count = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& [known, block] = queries[static_cast<std::size_t>(i)];
      hidden[static_cast<std::size_t>(i)] = kernels::block_hidden(g, known, block) ? 1 : 0;
    }
    if (std::find(hidden.begin(), hidden.end(), 0) != hidden.end()) return b - 1;
  }
  return cap;
}

}  // namespace

bool has_no_information(const LinearCode& code, const SecurityQuery& query) {
  const std::size_t n = code.length();
  check_query(n, query);
  std::vector<bool> in_known_or_block(n, false);
  for (std::size_t i : query.known) in_known_or_block[i] = true;
  for (std::size_t i : query.block) in_known_or_block[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_known_or_block[i]) rest.push_back(i);
  const Matrix& g = code.generator();
  const std::size_t rank_rest = rest.empty() ? 0 : rank(g.select_columns(rest));
  std::vector<std::size_t> widened = rest;
  widened.insert(widened.end(), query.block.begin(), query.block.end());
  return rank(g.select_columns(widened)) == rank_rest;
}

OracleResult entropy_oracle(const LinearCode& code, const SecurityQuery& query, const KnownValues& known_values,
                            const Vector& broadcast) {
  const std::size_t n = code.length();
  check_query(n, query);
  const std::uint32_t q = code.field()->order();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= q;
    if (space > kOracleLimit) throw Error(Errc::TooLargeToEnumerate, "q^n exceeds 2^20");
  }
  if (broadcast.size() != code.dimension()) throw Error(Errc::DimensionMismatch, "broadcast length");
  std::vector<elem_t> assignment(n, 0);
  for (std::size_t i : query.known) {
    const auto it = known_values.find(i);
    if (it == known_values.end()) throw Error(Errc::InvalidArgument, "missing value for known message " + std::to_string(i + 1));
    assignment[i] = it->second;
  }
  OracleResult res;
  res.counts = kernels::omp::posterior_counts(code.generator(), to_mask(query.known), assignment,
                                              to_mask(query.block), broadcast.values());
  // tally order follows ascending block index, whatever order the query lists
  for (auto c : res.counts) res.consistent += c;
  if (res.consistent == 0) throw Error(Errc::InconsistentObservation, "no message vector matches the observation");
  res.uniform = std::adjacent_find(res.counts.begin(), res.counts.end(), std::not_equal_to<>()) == res.counts.end();
  const double total = static_cast<double>(res.consistent);
  double h = 0.0;
  for (auto c : res.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  res.entropy_bits = h;
  return res;
}

std::size_t block_security_level(const LinearCode& code, std::size_t t) {
  const std::size_t n = code.length();
  if (t >= n) throw Error(Errc::InvalidArgument, "strength must be below n");
  if (n > kExhaustiveMessageLimit)
    throw Error(Errc::TooLargeToEnumerate, "exhaustive sweep limited to n <= " + std::to_string(kExhaustiveMessageLimit));
  return kernels::omp::block_level(code.generator(), t);
}

std::map<std::size_t, std::size_t> guaranteed_block_levels(std::size_t min_distance) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t t = 0; t + 2 <= min_distance; ++t) out[t] = min_distance - 1 - t;
  return out;
}

std::map<std::size_t, std::size_t> guaranteed_block_levels(const LinearCode& code) {
  return guaranteed_block_levels(min_distance(code));
}

std::optional<WeakSecurityWitness> weak_security_witness(const LinearCode& code, std::size_t t) {
  const std::size_t w = t + 1;
  if (w > code.length()) return std::nullopt;
  enumerable_size(code);
  const auto index = kernels::omp::first_of_weight(code.generator(), w);
  if (!index) return std::nullopt;
  const kernels::CodewordCursor cur(code.generator(), *index);
  Vector c(code.field(), std::vector<elem_t>(cur.word().begin(), cur.word().end()));
  const auto support = c.support();
  const std::size_t exposed = support.back();
  const Field& f = *code.field();
  const elem_t scale_by = f.inv(c[exposed]);
  Vector u = scale(scale_by, c);
  u[exposed] = f.sub(u[exposed], 1);

  WeakSecurityWitness wit{{support.begin(), support.end() - 1}, exposed, u, c, false};
  bool confined = true;
  for (std::size_t i : u.support())
    confined = confined && std::binary_search(wit.known.begin(), wit.known.end(), i);
  wit.confirmed = confined && code.contains(u + unit_vector(exposed, code.length(), code.field())) &&
                  find_recovery(code, wit.known, exposed).has_value();
  return wit;
}

std::vector<Vector> list_attack(const LinearCode& code, const AdversaryView& view) {
  check_view(code, view);
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  const FieldRef& field = code.field();
  const Field& f = *field;
  std::vector<std::size_t> unknown;
  for (std::size_t i = 0; i < n; ++i)
    if (view.known.find(i) == view.known.end()) unknown.push_back(i);

  const Matrix& g = code.generator();
  const Matrix g_unknown = g.select_columns(unknown);
  if (rank(g_unknown) < k)
    throw Error(Errc::RankDeficient, "the broadcast restricted to the unknown messages has rank below k");
  const std::size_t free = unknown.size() - k;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free; ++i) {
    total *= f.order();
    if (total > kListLimit) throw Error(Errc::ListTooLarge, "candidate list exceeds 2^20 vectors");
  }

  Vector rhs = view.broadcast;
  for (const auto& [i, v] : view.known)
    for (std::size_t r = 0; r < k; ++r) rhs[r] = f.sub(rhs[r], f.mul(g(r, i), v));
  const auto sol = solve(g_unknown, rhs);
  if (!sol) throw Error(Errc::InconsistentObservation, "no message vector matches the observation");

  std::vector<Vector> out;
  out.reserve(total);
  for (std::uint64_t combo = 0; combo < total; ++combo) {
    Vector z = sol->particular;
    std::uint64_t rest = combo;
    for (const Vector& kv : sol->kernel) {
      const auto c = static_cast<elem_t>(rest % f.order());
      rest /= f.order();
      if (c != 0) z = z + scale(c, kv);
    }
    Vector x(field, n);
    for (const auto& [i, v] : view.known) x[i] = v;
    for (std::size_t j = 0; j < unknown.size(); ++j) x[unknown[j]] = z[j];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end());
  });
  return out;
}

AttackOutcome complete_insecurity_attack(const LinearCode& code, const AdversaryView& view) {
  check_view(code, view);
  const auto known = keys_of(view.known);
  AttackOutcome out;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (view.known.count(i) != 0) continue;
    const auto rec = find_recovery(code, known, i);
    if (rec)
      out.recovered[i] = apply_recovery(*rec, view.broadcast, view.known);
    else
      out.resisted.push_back(i);
  }
  return out;
}

SecurityReport security_report(const LinearCode& code, const ReportOptions& options) {
  const std::size_t n = code.length();
  if (n >= 64) throw Error(Errc::TooLargeToEnumerate, "reports are limited to n < 64");
  const bool exhaustive = n <= kExhaustiveMessageLimit;
  if (!exhaustive && !options.allow_sampling)
    throw Error(Errc::TooLargeToEnumerate,
                "n = " + std::to_string(n) + " exceeds the exhaustive limit of " +
                    std::to_string(kExhaustiveMessageLimit) + "; enable sampling");

  SecurityReport rep;
  rep.mode = exhaustive ? ReportMode::Exhaustive : ReportMode::Sampled;
  rep.seed = options.seed;
  rep.n = n;
  rep.k = code.dimension();
  rep.weights = weight_distribution(code);
  rep.d = rep.weights.min_nonzero_weight();
  rep.dual_d = dual_distance(code);
  rep.mds = rep.d == n - rep.k + 1;
  rep.insecure_from = n + 1 - rep.dual_d;

  SplitMix64 rng(options.seed);
  const Matrix& g = code.generator();
  for (std::size_t t = 0; t < n; ++t) {
    StrengthVerdict v;
    v.strength = t;
    v.guaranteed_block = t + 2 <= rep.d ? rep.d - 1 - t : 0;
    const auto adversaries =
        exhaustive ? kernels::subsets_of_size(n, t) : draw_adversaries(rng, n, t, options.adversary_samples);
    v.measured_block = exhaustive ? kernels::omp::block_level(g, adversaries, n - t)
                                  : sampled_block_level(g, adversaries, n - t, options.block_samples, rng);
    v.weakly_secure = v.measured_block >= 1;
    if (rep.weights.counts[t + 1] != 0) v.weak_witness = weak_security_witness(code, t);
    const auto sweep = kernels::omp::insecurity(g, adversaries);
    v.adversaries = sweep.examined;
    v.broken_adversaries = sweep.broken;
    v.completely_insecure = sweep.examined != 0 && sweep.broken == sweep.examined;
    if (sweep.first_broken) v.broken_witness = kernels::mask_indices(*sweep.first_broken);
    rep.strengths.push_back(std::move(v));
  }

  for (std::size_t t = 0; t < n; ++t) {
    const auto& v = rep.strengths[t];
    if (v.measured_block < v.guaranteed_block) rep.guarantee_holds = false;
    if (t >= rep.insecure_from && !v.completely_insecure) rep.threshold_holds = false;
    if (t + 1 < n) {
      const auto& next = rep.strengths[t + 1];
      if (next.measured_block > v.measured_block) rep.monotone = false;
      if (exhaustive && v.completely_insecure && !next.completely_insecure) rep.monotone = false;
    }
  }
  return rep;
}

}  // namespace icsi
