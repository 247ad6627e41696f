#pragma once

// Built-in fixtures and the property suites behind `icsi-sec verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "icsi/rng.hpp"
#include "icsi/security.hpp"

namespace icsi::verify {

inline constexpr std::uint64_t kCorpusSeed = 2011;

/// The 7-receiver binary instance whose indicator scheme is the [7,4,3]
/// Hamming code.
IcsiInstance hamming_instance();

/// m = k receivers sharing side information {k+1..n}, receiver j demanding
/// x_j, served by the systematic Reed-Solomon code (choice vectors are the
/// rows of P in G = (I | P)).
Scheme reed_solomon_scheme(std::size_t n, std::size_t k, FieldRef field);

/// Uniform random spanning matrix, retried until nonzero.
LinearCode random_code(SplitMix64& rng, std::size_t n, std::size_t k, FieldRef field);

/// A random instance with n messages over `field`, 1..n receivers, random
/// side information and demands.
IcsiInstance random_instance(SplitMix64& rng, std::size_t n, FieldRef field);

/// Random choice vectors confined to each X_j.
ChoiceVectors random_choice_vectors(SplitMix64& rng, const IcsiInstance& instance);

struct CorpusEntry {
  std::string name;
  LinearCode code;
};

/// Repetition [3,1]_2, the Hamming code above, RS(7,3) over F_8, and
/// `random_codes` seeded random codes with n <= 8 and q in {2,3,4}.
std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed = kCorpusSeed, std::size_t random_codes = 50);

/// Every binary instance with n <= max_n messages and m <= max_m receivers,
/// in a fixed order, passed to `visit`.
template <typename Visit>
void for_each_binary_instance(std::size_t max_n, std::size_t max_m, const FieldRef& f2, Visit&& visit);

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::string counterexample;  // first violation, human readable

  bool passed() const noexcept { return violations == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = kCorpusSeed;
  /// Harness self-test: the code under test gets one generator entry
  /// mutated while the expected values still come from the original.
  bool corrupt = false;
  std::size_t random_codes = 50;
  std::size_t random_instances = 1000;
};

/// Suite names: thm1 (Singleton bound), thm2 (orthogonal-array counts),
/// lemma3 (algebraic check vs entropy oracle), thm3 (block-security
/// guarantee, weight witnesses, list attack), thm4 (complete insecurity at
/// n - d_dual + 1), all.
std::vector<std::string> suite_names();
std::vector<SuiteResult> run(std::string_view suite, const VerifyOptions& options);

// ---- template implementation ----

template <typename Visit>
void for_each_binary_instance(std::size_t max_n, std::size_t max_m, const FieldRef& f2, Visit&& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t per_receiver = n << n;  // demand x side-info subset
    for (std::size_t m = 1; m <= max_m; ++m) {
      std::size_t total = 1;
      for (std::size_t j = 0; j < m; ++j) total *= per_receiver;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<Receiver> receivers;
        std::size_t rest = code;
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t choice = rest % per_receiver;
          rest /= per_receiver;
          Receiver r;
          r.demand = choice % n;
          const std::size_t side = choice / n;
          for (std::size_t i = 0; i < n; ++i)
            if (side & (std::size_t{1} << i)) r.side_info.push_back(i);
          receivers.push_back(std::move(r));
        }
        visit(IcsiInstance(f2, n, std::move(receivers)));
      }
    }
  }
}

}  // namespace icsi::verify
