#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "icsi/instance.hpp"

namespace icsi {

/// Exhaustive (X_A, B) sweeps run up to this many messages.
inline constexpr std::size_t kExhaustiveMessageLimit = 14;
/// The entropy oracle enumerates at most 2^20 message vectors.
inline constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 20;
/// Largest candidate list the list attack will materialize.
inline constexpr std::uint64_t kListLimit = std::uint64_t{1} << 20;

/// Adversary knowledge X_A and the block B it wants to learn about. The
/// remaining indices E = [n] \ (X_A u B) complete the partition.
struct SecurityQuery {
  std::vector<std::size_t> known;
  std::vector<std::size_t> block;
};

/// What an eavesdropper holds: x on X_A (the keys of `known`) and the
/// overheard broadcast s.
struct AdversaryView {
  KnownValues known;
  Vector broadcast;

  std::size_t strength() const noexcept { return known.size(); }
};

/// Zero information about x_B: no codeword vanishes on E while being
/// nonzero on B, i.e. every column of G_B lies in the column span of G_E.
/// Depends on (G, X_A, B) only.
bool has_no_information(const LinearCode& code, const SecurityQuery& query);

struct OracleResult {
  std::vector<std::uint64_t> counts;  // x_B tally, q^|B| entries
  std::uint64_t consistent = 0;       // message vectors matching the observation
  double entropy_bits = 0.0;          // H(X_B | s, x_{X_A}) for uniform X
  bool uniform = false;               // all counts equal <=> entropy = |B| log2 q
};

/// Brute-force posterior of x_B given the observation, by enumerating every
/// message vector consistent with it. Requires q^n <= 2^20.
OracleResult entropy_oracle(const LinearCode& code, const SecurityQuery& query, const KnownValues& known_values,
                            const Vector& broadcast);

/// Largest b such that the scheme is b-block secure against every adversary
/// of strength t; 0 means not even weakly secure. Exhaustive, n <= 14.
std::size_t block_security_level(const LinearCode& code, std::size_t t);

/// d - 1 - t for every t <= d - 2; no entry elsewhere.
std::map<std::size_t, std::size_t> guaranteed_block_levels(std::size_t min_distance);
std::map<std::size_t, std::size_t> guaranteed_block_levels(const LinearCode& code);

/// An adversary of strength t = w - 1 that learns one message, built from the
/// first codeword of weight w in enumeration order.
struct WeakSecurityWitness {
  std::vector<std::size_t> known;  // supp(c) minus its last index
  std::size_t exposed = 0;         // last index of supp(c)
  Vector confined;                 // u = c / c_exposed - e_exposed
  Vector codeword;                 // c
  bool confirmed = false;          // u confined to `known` and u + e_exposed in C
};

std::optional<WeakSecurityWitness> weak_security_witness(const LinearCode& code, std::size_t t);

/// All z with z_{X_A} = x_{X_A} and G z^T = s^T, sorted lexicographically.
/// Throws RankDeficient when rank(G restricted to the unknown indices) < k,
/// ListTooLarge beyond 2^20 candidates, InconsistentObservation when empty.
std::vector<Vector> list_attack(const LinearCode& code, const AdversaryView& view);

struct AttackOutcome {
  KnownValues recovered;             // index -> value, for the unknown indices
  std::vector<std::size_t> resisted; // unknown indices with no recovery
  bool complete() const noexcept { return resisted.empty(); }
};

/// For each unknown index i, looks for a codeword c with c_i = 1 and
/// supp(c) inside X_A u {i}; recovers x_i = c . x from s and the known values.
AttackOutcome complete_insecurity_attack(const LinearCode& code, const AdversaryView& view);

enum class ReportMode { Exhaustive, Sampled };

struct ReportOptions {
  bool allow_sampling = false;
  std::uint64_t seed = 0;
  std::size_t adversary_samples = 64;  // per strength, sampled mode
  std::size_t block_samples = 256;     // per adversary and block size, sampled mode
};

struct StrengthVerdict {
  std::size_t strength = 0;
  std::size_t guaranteed_block = 0;  // d - 1 - t when t <= d - 2, else 0
  std::size_t measured_block = 0;
  bool weakly_secure = false;
  std::optional<WeakSecurityWitness> weak_witness;
  bool completely_insecure = false;  // for every examined adversary of this strength
  std::uint64_t adversaries = 0;
  std::uint64_t broken_adversaries = 0;
  std::optional<std::vector<std::size_t>> broken_witness;
};

struct SecurityReport {
  ReportMode mode = ReportMode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t dual_d = 0;
  bool mds = false;
  WeightDistribution weights;
  std::size_t insecure_from = 0;  // n - d_dual + 1
  std::vector<StrengthVerdict> strengths;  // t = 0 .. n-1
  bool guarantee_holds = true;   // measured >= guaranteed everywhere
  bool threshold_holds = true;   // completely insecure for every t >= insecure_from
  bool monotone = true;          // levels nonincreasing, insecurity upward closed
};

/// Guaranteed against measured security for every strength t. Exhaustive for
/// n <= 14; beyond that throws TooLargeToEnumerate unless sampling is
/// allowed, in which case adversaries and blocks are drawn from the seeded
/// generator and the report is marked Sampled.
SecurityReport security_report(const LinearCode& code, const ReportOptions& options = {});

}  // namespace icsi
