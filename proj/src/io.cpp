#include "icsi/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace icsi::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedInstance, what); }

void only_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) malformed(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) malformed("unknown key '" + key + "' in " + where);
  }
}

std::uint64_t as_uint(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) malformed(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::size_t as_index(const Json& j, std::size_t n, const std::string& what) {
  const std::uint64_t v = as_uint(j, what);
  if (v < 1 || v > n) malformed(what + " = " + std::to_string(v) + " is outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

std::vector<std::size_t> index_list(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(as_index(e, n, what));
  return out;
}

Json indices_to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t i : v) a.push_back(i + 1);
  return a;
}

std::vector<std::size_t> indices_from_json(const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(e.get<std::size_t>() - 1);
  return out;
}

Json values_to_json(std::span<const elem_t> v) {
  Json a = Json::array();
  for (elem_t x : v) a.push_back(x);
  return a;
}

std::vector<elem_t> values_from_json(const Json& j) {
  std::vector<elem_t> out;
  for (const auto& e : j) out.push_back(e.get<elem_t>());
  return out;
}

Json optional_size(std::optional<std::size_t> v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

FieldParams FieldParams::of(const Field& f) {
  FieldParams fp{f.characteristic(), f.degree(), std::nullopt};
  if (f.degree() > 1) fp.poly = f.modulus();
  return fp;
}

Json field_to_json(const FieldParams& f) {
  Json j;
  j["p"] = f.p;
  j["m"] = f.m;
  if (f.poly) j["poly"] = *f.poly;
  return j;
}

FieldParams field_from_json(const Json& j) {
  only_keys(j, {"p", "m", "poly"}, "field");
  if (!j.contains("p")) malformed("field.p is required");
  FieldParams f;
  f.p = static_cast<std::uint32_t>(as_uint(j["p"], "field.p"));
  if (j.contains("m")) f.m = static_cast<std::uint32_t>(as_uint(j["m"], "field.m"));
  if (j.contains("poly")) {
    if (!j["poly"].is_array()) malformed("field.poly must be an array");
    std::vector<std::uint32_t> poly;
    for (const auto& c : j["poly"]) poly.push_back(static_cast<std::uint32_t>(as_uint(c, "field.poly entry")));
    f.poly = std::move(poly);
  }
  return f;
}

LoadedInstance parse_instance(const Json& doc) {
  only_keys(doc, {"field", "n", "receivers", "choice_policy"}, "instance");
  for (const char* key : {"field", "n", "receivers"})
    if (!doc.contains(key)) malformed(std::string("instance.") + key + " is required");

  const FieldRef field = field_from_json(doc["field"]).make();
  const auto n = static_cast<std::size_t>(as_uint(doc["n"], "n"));
  if (n == 0) malformed("n must be positive");
  if (!doc["receivers"].is_array() || doc["receivers"].empty()) malformed("receivers must be a nonempty array");

  std::vector<MultiDemandReceiver> raw;
  std::vector<std::string> notices;
  for (std::size_t j = 0; j < doc["receivers"].size(); ++j) {
    const Json& r = doc["receivers"][j];
    const std::string where = "receivers[" + std::to_string(j + 1) + "]";
    only_keys(r, {"side_info", "demand"}, where);
    if (!r.contains("demand")) malformed(where + ".demand is required");
    MultiDemandReceiver m;
    if (r.contains("side_info")) m.side_info = index_list(r["side_info"], n, where + ".side_info");
    if (r["demand"].is_array()) {
      m.demands = index_list(r["demand"], n, where + ".demand");
      if (m.demands.empty()) throw Error(Errc::EmptyDemand, where + " demands nothing");
      if (m.demands.size() > 1)
        notices.push_back("receiver " + std::to_string(j + 1) + " demands " + std::to_string(m.demands.size()) +
                          " messages; split into single-demand receivers");
    } else {
      m.demands = {as_index(r["demand"], n, where + ".demand")};
    }
    raw.push_back(std::move(m));
  }
  IcsiInstance inst = split_multi_request(field, n, raw);

  LoadedInstance out{inst, {}, "indicator", std::move(notices)};
  const Json policy = doc.contains("choice_policy") ? doc["choice_policy"] : Json("indicator");
  if (policy.is_string()) {
    const auto name = policy.get<std::string>();
    if (name == "indicator")
      out.choice = default_choice_vectors(inst, ChoicePolicy::Indicator);
    else if (name == "zero")
      out.choice = default_choice_vectors(inst, ChoicePolicy::Zero);
    else
      malformed("choice_policy must be \"indicator\", \"zero\" or a list of vectors");
    out.policy = name;
  } else if (policy.is_array()) {
    if (policy.size() != inst.receiver_count())
      malformed("choice_policy lists " + std::to_string(policy.size()) + " vectors for " +
                std::to_string(inst.receiver_count()) + " receivers (after splitting)");
    for (const auto& row : policy) {
      if (!row.is_array() || row.size() != n) malformed("each choice vector must list n values");
      std::vector<elem_t> vals;
      for (const auto& e : row) {
        const std::uint64_t v = as_uint(e, "choice vector entry");
        if (v >= field->order()) malformed("choice vector entry outside the field");
        vals.push_back(static_cast<elem_t>(v));
      }
      out.choice.emplace_back(field, std::move(vals));
    }
    out.policy = "explicit";
  } else {
    malformed("choice_policy must be a string or an array");
  }
  return out;
}

LoadedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
  return parse_instance(doc);
}

Json report_to_json(const ReportFile& file) {
  const SecurityReport& r = file.report;
  Json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["mode"] = r.mode == ReportMode::Exhaustive ? "exhaustive" : "sampled";
  doc["seed"] = r.seed;
  doc["field"] = field_to_json(file.field);
  doc["code"] = {{"n", r.n},
                 {"k", r.k},
                 {"d", r.d},
                 {"d_dual", r.dual_d},
                 {"mds", r.mds},
                 {"weight_distribution", r.weights.counts}};
  Json g = Json::array();
  for (std::size_t i = 0; i < file.generator.rows(); ++i) g.push_back(values_to_json(file.generator.row(i)));
  doc["generator"] = g;
  doc["thresholds"] = {{"guaranteed_up_to", optional_size(r.d >= 2 ? std::optional<std::size_t>(r.d - 2) : std::nullopt)},
                       {"insecure_from", r.insecure_from}};
  Json strengths = Json::array();
  for (const auto& v : r.strengths) {
    Json s;
    s["t"] = v.strength;
    s["guaranteed_block"] = v.guaranteed_block;
    s["measured_block"] = v.measured_block;
    s["weakly_secure"] = v.weakly_secure;
    if (v.weak_witness) {
      const auto& w = *v.weak_witness;
      s["weak_witness"] = {{"known", indices_to_json(w.known)},
                           {"exposed", w.exposed + 1},
                           {"u", values_to_json(w.confined.values())},
                           {"codeword", values_to_json(w.codeword.values())},
                           {"confirmed", w.confirmed}};
    } else {
      s["weak_witness"] = nullptr;
    }
    s["completely_insecure"] = v.completely_insecure;
    s["adversaries"] = v.adversaries;
    s["broken_adversaries"] = v.broken_adversaries;
    s["broken_witness"] = v.broken_witness ? indices_to_json(*v.broken_witness) : Json(nullptr);
    strengths.push_back(std::move(s));
  }
  doc["strengths"] = strengths;
  doc["checks"] = {{"guarantee_holds", r.guarantee_holds},
                   {"threshold_holds", r.threshold_holds},
                   {"monotone", r.monotone}};
  return doc;
}

ReportFile report_from_json(const Json& doc) {
  const FieldParams fp = field_from_json(doc.at("field"));
  const FieldRef field = fp.make();
  const Json& code = doc.at("code");
  SecurityReport r;
  r.mode = doc.at("mode").get<std::string>() == "exhaustive" ? ReportMode::Exhaustive : ReportMode::Sampled;
  r.seed = doc.at("seed").get<std::uint64_t>();
  r.n = code.at("n").get<std::size_t>();
  r.k = code.at("k").get<std::size_t>();
  r.d = code.at("d").get<std::size_t>();
  r.dual_d = code.at("d_dual").get<std::size_t>();
  r.mds = code.at("mds").get<bool>();
  r.weights.counts = code.at("weight_distribution").get<std::vector<std::uint64_t>>();
  r.insecure_from = doc.at("thresholds").at("insecure_from").get<std::size_t>();

  std::vector<elem_t> data;
  for (const auto& row : doc.at("generator")) {
    auto vals = values_from_json(row);
    data.insert(data.end(), vals.begin(), vals.end());
  }
  Matrix g(field, r.k, r.n, std::move(data));

  for (const auto& s : doc.at("strengths")) {
    StrengthVerdict v;
    v.strength = s.at("t").get<std::size_t>();
    v.guaranteed_block = s.at("guaranteed_block").get<std::size_t>();
    v.measured_block = s.at("measured_block").get<std::size_t>();
    v.weakly_secure = s.at("weakly_secure").get<bool>();
    if (!s.at("weak_witness").is_null()) {
      const Json& w = s.at("weak_witness");
      v.weak_witness = WeakSecurityWitness{indices_from_json(w.at("known")), w.at("exposed").get<std::size_t>() - 1,
                                           Vector(field, values_from_json(w.at("u"))),
                                           Vector(field, values_from_json(w.at("codeword"))),
                                           w.at("confirmed").get<bool>()};
    }
    v.completely_insecure = s.at("completely_insecure").get<bool>();
    v.adversaries = s.at("adversaries").get<std::uint64_t>();
    v.broken_adversaries = s.at("broken_adversaries").get<std::uint64_t>();
    if (!s.at("broken_witness").is_null()) v.broken_witness = indices_from_json(s.at("broken_witness"));
    r.strengths.push_back(std::move(v));
  }
  const Json& checks = doc.at("checks");
  r.guarantee_holds = checks.at("guarantee_holds").get<bool>();
  r.threshold_holds = checks.at("threshold_holds").get<bool>();
  r.monotone = checks.at("monotone").get<bool>();
  return {fp, std::move(g), std::move(r)};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace icsi::io
