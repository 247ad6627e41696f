#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icsi/code.hpp"

namespace icsi {

/// Message values known to a party, keyed by 0-based message index.
using KnownValues = std::map<std::size_t, elem_t>;

struct Receiver {
  std::vector<std::size_t> side_info;  // X_j, 0-based
  std::size_t demand = 0;              // f(j), 0-based

  friend bool operator==(const Receiver&, const Receiver&) = default;
};

/// A receiver that may request several messages before splitting.
struct MultiDemandReceiver {
  std::vector<std::size_t> side_info;
  std::vector<std::size_t> demands;
};

struct ValidationReport {
  std::vector<std::size_t> trivially_satisfied;  // f(j) in X_j
  std::vector<std::size_t> without_side_info;    // X_j empty
  std::vector<std::string> warnings;

  bool clean() const noexcept { return warnings.empty(); }
};

/// Checks indices against [0, n). Throws MalformedInstance on out-of-range or
/// duplicate indices, n = 0 or no receivers; otherwise reports the benign
/// oddities as warnings.
ValidationReport validate(std::size_t n, std::span<const Receiver> receivers);

/// An ICSI instance: n messages over F_q, receivers R_j holding X_j and
/// demanding x_{f(j)}. Always valid once constructed.
class IcsiInstance {
 public:
  IcsiInstance(FieldRef field, std::size_t n, std::vector<Receiver> receivers);

  const FieldRef& field() const noexcept { return field_; }
  std::size_t message_count() const noexcept { return n_; }
  std::size_t receiver_count() const noexcept { return receivers_.size(); }
  const std::vector<Receiver>& receivers() const noexcept { return receivers_; }
  const Receiver& receiver(std::size_t j) const;
  bool trivially_satisfied(std::size_t j) const;

  friend bool operator==(const IcsiInstance& a, const IcsiInstance& b) noexcept {
    return same_field(a.field_, b.field_) && a.n_ == b.n_ && a.receivers_ == b.receivers_;
  }

 private:
  FieldRef field_;
  std::size_t n_;
  std::vector<Receiver> receivers_;
};

ValidationReport validate(const IcsiInstance& instance);

/// Replaces every receiver demanding several messages by one receiver per
/// demand (ascending), each with the same side information.
IcsiInstance split_multi_request(FieldRef field, std::size_t n, std::span<const MultiDemandReceiver> receivers);

/// Each message becomes `packets` consecutive packets: message i maps to
/// packets i*packets .. i*packets + packets - 1. Receivers know every packet
/// of their known messages and demand every packet of f(j), one receiver per
/// demanded packet.
IcsiInstance vectorize_instance(const IcsiInstance& instance, std::size_t packets);

enum class ChoicePolicy { Indicator, Zero };

/// v^(j) for each receiver; supp(v^(j)) must lie inside X_j.
using ChoiceVectors = std::vector<Vector>;

ChoiceVectors default_choice_vectors(const IcsiInstance& instance, ChoicePolicy policy = ChoicePolicy::Indicator);

/// Coefficients that let a party knowing `known` recover one message:
/// y G = u + e_target with supp(u) inside `known`.
struct Recovery {
  Vector coefficients;  // y, length k
  Vector confined;      // u, length n
};

/// Solves for a recovery of `target` from the broadcast and the known
/// indices; nullopt when none exists. No codeword enumeration.
std::optional<Recovery> find_recovery(const LinearCode& code, std::span<const std::size_t> known, std::size_t target);

/// y . s - u . x using only the known values.
elem_t apply_recovery(const Recovery& recovery, const Vector& broadcast, const KnownValues& known);

class Scheme {
 public:
  const IcsiInstance& instance() const noexcept { return instance_; }
  const ChoiceVectors& choice_vectors() const noexcept { return choice_; }
  const LinearCode& code() const noexcept { return code_; }
  const Matrix& generator() const noexcept { return code_.generator(); }

 private:
  friend Scheme build_scheme(const IcsiInstance&, const ChoiceVectors&);
  Scheme(IcsiInstance inst, ChoiceVectors cv, LinearCode code)
      : instance_(std::move(inst)), choice_(std::move(cv)), code_(std::move(code)) {}

  IcsiInstance instance_;
  ChoiceVectors choice_;
  LinearCode code_;
};

/// C = span{ v^(j) + e_f(j) } over the receivers with f(j) not in X_j.
/// Throws ConfinementViolation when some v^(j) leaves X_j, EmptyInput when
/// every receiver is trivially satisfied.
Scheme build_scheme(const IcsiInstance& instance, const ChoiceVectors& choice);

/// s^T = G x^T.
Vector encode(const Scheme& scheme, const Vector& messages);

/// Receiver j's reconstruction of x_f(j) from the broadcast and its side
/// values (which must cover X_j). Throws NotDecodable when no confined u with
/// u + e_f(j) in C exists.
elem_t decode_receiver(const Scheme& scheme, std::size_t j, const Vector& broadcast, const KnownValues& side);

/// Existence of u confined to X_j with u + e_f(j) in C.
bool feasible(const Scheme& scheme, std::size_t j);

}  // namespace icsi
