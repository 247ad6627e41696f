#include "icsi/instance.hpp"

#include <algorithm>
#include <set>

namespace icsi {

ValidationReport validate(std::size_t n, std::span<const Receiver> receivers) {
  if (n == 0) throw Error(Errc::MalformedInstance, "an instance needs at least one message");
  if (receivers.empty()) throw Error(Errc::MalformedInstance, "an instance needs at least one receiver");
  ValidationReport report;
  for (std::size_t j = 0; j < receivers.size(); ++j) {
    const Receiver& r = receivers[j];
    const std::string who = "receiver " + std::to_string(j + 1);
    if (r.demand >= n)
      throw Error(Errc::MalformedInstance, who + " demands message " + std::to_string(r.demand + 1) + " of " +
                                               std::to_string(n));
    std::set<std::size_t> seen;
    for (std::size_t i : r.side_info) {
      if (i >= n)
        throw Error(Errc::MalformedInstance, who + " side information index " + std::to_string(i + 1) +
                                                 " out of range");
      if (!seen.insert(i).second)
        throw Error(Errc::MalformedInstance, who + " lists message " + std::to_string(i + 1) + " twice");
    }
    if (seen.count(r.demand) != 0) {
      report.trivially_satisfied.push_back(j);
      report.warnings.push_back(who + " already holds its demand");
    }
    if (r.side_info.empty()) {
      report.without_side_info.push_back(j);
      report.warnings.push_back(who + ": no side information");
    }
  }
  return report;
}

IcsiInstance::IcsiInstance(FieldRef field, std::size_t n, std::vector<Receiver> receivers)
    : field_(std::move(field)), n_(n), receivers_(std::move(receivers)) {
  if (!field_) throw Error(Errc::MalformedInstance, "missing field");
  validate(n_, receivers_);
}

const Receiver& IcsiInstance::receiver(std::size_t j) const {
  if (j >= receivers_.size()) throw Error(Errc::IndexOutOfRange, "receiver " + std::to_string(j + 1));
  return receivers_[j];
}

bool IcsiInstance::trivially_satisfied(std::size_t j) const {
  const Receiver& r = receiver(j);
  return std::find(r.side_info.begin(), r.side_info.end(), r.demand) != r.side_info.end();
}

ValidationReport validate(const IcsiInstance& instance) {
  return validate(instance.message_count(), instance.receivers());
}

IcsiInstance split_multi_request(FieldRef field, std::size_t n, std::span<const MultiDemandReceiver> receivers) {
  std::vector<Receiver> out;
  for (std::size_t j = 0; j < receivers.size(); ++j) {
    if (receivers[j].demands.empty())
      throw Error(Errc::EmptyDemand, "receiver " + std::to_string(j + 1) + " demands nothing");
    std::vector<std::size_t> demands = receivers[j].demands;
    std::sort(demands.begin(), demands.end());
    demands.erase(std::unique(demands.begin(), demands.end()), demands.end());
    for (std::size_t d : demands) out.push_back({receivers[j].side_info, d});
  }
  return IcsiInstance(std::move(field), n, std::move(out));
}

IcsiInstance vectorize_instance(const IcsiInstance& instance, std::size_t packets) {
  if (packets == 0) throw Error(Errc::InvalidArgument, "packets per message must be at least 1");
  if (packets == 1) return instance;
  std::vector<MultiDemandReceiver> expanded;
  expanded.reserve(instance.receiver_count());
  for (const Receiver& r : instance.receivers()) {
    MultiDemandReceiver m;
    for (std::size_t i : r.side_info)
      for (std::size_t p = 0; p < packets; ++p) m.side_info.push_back(i * packets + p);
    std::sort(m.side_info.begin(), m.side_info.end());
    for (std::size_t p = 0; p < packets; ++p) m.demands.push_back(r.demand * packets + p);
    expanded.push_back(std::move(m));
  }
  return split_multi_request(instance.field(), instance.message_count() * packets, expanded);
}

ChoiceVectors default_choice_vectors(const IcsiInstance& instance, ChoicePolicy policy) {
  ChoiceVectors out;
  out.reserve(instance.receiver_count());
  for (const Receiver& r : instance.receivers()) {
    Vector v(instance.field(), instance.message_count());
    if (policy == ChoicePolicy::Indicator)
      for (std::size_t i : r.side_info) v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

Scheme build_scheme(const IcsiInstance& instance, const ChoiceVectors& choice) {
  if (choice.size() != instance.receiver_count())
    throw Error(Errc::DimensionMismatch, "need one choice vector per receiver");
  const std::size_t n = instance.message_count();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < choice.size(); ++j) {
    const Vector& v = choice[j];
    if (!same_field(v.field(), instance.field())) throw Error(Errc::FieldMismatch, "choice vector field");
    if (v.size() != n) throw Error(Errc::DimensionMismatch, "choice vector length");
    const Receiver& r = instance.receiver(j);
    for (std::size_t i : v.support()) {
      if (std::find(r.side_info.begin(), r.side_info.end(), i) == r.side_info.end())
        throw Error(Errc::ConfinementViolation, "v^(" + std::to_string(j + 1) + ") is nonzero at message " +
                                                    std::to_string(i + 1) + " outside X_" + std::to_string(j + 1));
    }
    if (instance.trivially_satisfied(j)) continue;
    rows.push_back(v + unit_vector(r.demand, n, instance.field()));
  }
  if (rows.empty()) throw Error(Errc::EmptyInput, "every receiver already holds its demand; nothing to send");
  return Scheme(instance, choice, LinearCode::from_rows(rows));
}

Vector encode(const Scheme& scheme, const Vector& messages) {
  if (messages.size() != scheme.instance().message_count())
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(scheme.instance().message_count()) +
                                             " messages, got " + std::to_string(messages.size()));
  return multiply(scheme.generator(), messages);
}

std::optional<Recovery> find_recovery(const LinearCode& code, std::span<const std::size_t> known, std::size_t target) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (target >= n) throw Error(Errc::IndexOutOfRange, "target " + std::to_string(target + 1));
  std::vector<bool> is_known(n, false);
  for (std::size_t i : known) {
    if (i >= n) throw Error(Errc::IndexOutOfRange, "known index " + std::to_string(i + 1));
    is_known[i] = true;
  }
  const FieldRef& field = code.field();
  if (is_known[target]) {
    Vector u(field, n);
    u[target] = field->neg(1);
    return Recovery{Vector(field, k), std::move(u)};
  }
  // (yG)_target = 1 and (yG)_l = 0 off known u {target}
  std::vector<std::size_t> constrained{target};
  for (std::size_t l = 0; l < n; ++l)
    if (!is_known[l] && l != target) constrained.push_back(l);
  const Matrix system = code.generator().select_columns(constrained).transpose();
  Vector rhs(field, constrained.size());
  rhs[0] = 1;
  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;
  Vector u = left_multiply(sol->particular, code.generator());
  u[target] = field->sub(u[target], 1);
  return Recovery{std::move(sol->particular), std::move(u)};
}

elem_t apply_recovery(const Recovery& recovery, const Vector& broadcast, const KnownValues& known) {
  const Field& f = *broadcast.field();
  elem_t value = dot(recovery.coefficients, broadcast);
  for (std::size_t i : recovery.confined.support()) {
    const auto it = known.find(i);
    if (it == known.end()) throw Error(Errc::InvalidArgument, "missing value for message " + std::to_string(i + 1));
    value = f.sub(value, f.mul(recovery.confined[i], it->second));
  }
  return value;
}

elem_t decode_receiver(const Scheme& scheme, std::size_t j, const Vector& broadcast, const KnownValues& side) {
  const Receiver& r = scheme.instance().receiver(j);
  if (broadcast.size() != scheme.code().dimension())
    throw Error(Errc::DimensionMismatch, "broadcast has " + std::to_string(broadcast.size()) + " symbols, expected " +
                                             std::to_string(scheme.code().dimension()));
  for (std::size_t i : r.side_info)
    if (side.find(i) == side.end())
      throw Error(Errc::InvalidArgument, "missing side value for message " + std::to_string(i + 1));
  const auto rec = find_recovery(scheme.code(), r.side_info, r.demand);
  if (!rec) throw Error(Errc::NotDecodable, "receiver " + std::to_string(j + 1) + " cannot reconstruct its demand");
  return apply_recovery(*rec, broadcast, side);
}

bool feasible(const Scheme& scheme, std::size_t j) {
  const Receiver& r = scheme.instance().receiver(j);
  return find_recovery(scheme.code(), r.side_info, r.demand).has_value();
}

}  // namespace icsi
