// icsi-sec: analyze, encode, decode, attack and verify from the command line.
//
// Exit codes: 0 ok, 1 I/O, 2 malformed input, 3 enumeration guard,
// 4 not decodable, 5 candidate list too large, 6 property violation.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icsi/io.hpp"
#include "icsi/parallel.hpp"
#include "icsi/verify.hpp"

namespace {

using namespace icsi;

enum Exit : int { kOk = 0, kIo = 1, kMalformed = 2, kGuard = 3, kNotDecodable = 4, kListTooLarge = 5, kViolation = 6 };

// Bad command-line values, as opposed to bad files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(Errc code) {
  switch (code) {
    case Errc::TooLargeToEnumerate:
      return kGuard;
    case Errc::NotDecodable:
      return kNotDecodable;
    case Errc::ListTooLarge:
      return kListTooLarge;
    default:
      return kMalformed;
  }
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') throw UsageError(what + ": '" + text + "' is not a nonnegative integer");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Vector parse_values(const std::string& text, std::size_t expected, const FieldRef& field, const std::string& what) {
  const auto items = split(text, ',');
  if (items.size() != expected)
    throw UsageError(what + " lists " + std::to_string(items.size()) + " values, expected " + std::to_string(expected));
  Vector v(field, expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const std::uint64_t x = parse_uint(items[i], what);
    if (x >= field->order()) throw UsageError(what + ": " + items[i] + " is not an element of " + field->name());
    v[i] = static_cast<elem_t>(x);
  }
  return v;
}

// "i=v,i=v" with 1-based indices.
KnownValues parse_assignments(const std::string& text, std::size_t n, const FieldRef& field, const std::string& what) {
  KnownValues out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError(what + ": expected i=v, got '" + item + "'");
    const std::uint64_t i = parse_uint(item.substr(0, eq), what);
    const std::uint64_t v = parse_uint(item.substr(eq + 1), what);
    if (i < 1 || i > n) throw UsageError(what + ": index " + std::to_string(i) + " is outside 1.." + std::to_string(n));
    if (v >= field->order()) throw UsageError(what + ": " + std::to_string(v) + " is not an element of " + field->name());
    if (!out.emplace(i - 1, static_cast<elem_t>(v)).second)
      throw UsageError(what + ": index " + std::to_string(i) + " given twice");
  }
  return out;
}

Scheme load_scheme(const std::string& path) {
  io::LoadedInstance loaded = io::load_instance_file(path);
  for (const auto& note : loaded.notices) std::cerr << "note: " << note << "\n";
  return build_scheme(loaded.instance, loaded.choice);
}

int cmd_analyze(const std::string& path, std::uint64_t seed, bool sample) {
  const Scheme scheme = load_scheme(path);
  ReportOptions opt;
  opt.allow_sampling = sample;
  opt.seed = seed;
  const SecurityReport report = security_report(scheme.code(), opt);
  if (report.mode == ReportMode::Sampled) std::cerr << "note: n exceeds the exhaustive limit; report is sampled\n";
  std::cout << io::dump(io::report_to_json({io::FieldParams::of(*scheme.code().field()), scheme.generator(), report}));
  return kOk;
}

int cmd_encode(const std::string& path, const std::string& messages) {
  const Scheme scheme = load_scheme(path);
  const std::size_t n = scheme.instance().message_count();
  const Vector x = parse_values(messages, n, scheme.code().field(), "--messages");
  const Vector s = encode(scheme, x);
  for (elem_t v : s.values()) std::cout << v << "\n";
  return kOk;
}

int cmd_decode(const std::string& path, std::size_t receiver, const std::string& broadcast, const std::string& side) {
  const Scheme scheme = load_scheme(path);
  const std::size_t m = scheme.instance().receiver_count();
  if (receiver < 1 || receiver > m)
    throw UsageError("--receiver " + std::to_string(receiver) + " is outside 1.." + std::to_string(m));
  const FieldRef& field = scheme.code().field();
  const Vector s = parse_values(broadcast, scheme.code().dimension(), field, "--broadcast");
  const KnownValues known = parse_assignments(side, scheme.instance().message_count(), field, "--side");
  std::cout << decode_receiver(scheme, receiver - 1, s, known) << "\n";
  return kOk;
}

int cmd_attack(const std::string& path, const std::string& known_text, const std::string& broadcast, bool list) {
  const Scheme scheme = load_scheme(path);
  const LinearCode& code = scheme.code();
  const AdversaryView view{parse_assignments(known_text, code.length(), code.field(), "--known"),
                           parse_values(broadcast, code.dimension(), code.field(), "--broadcast")};
  const AttackOutcome outcome = complete_insecurity_attack(code, view);
  // Buffer so that a failing list attack leaves stdout empty.
  std::ostringstream out;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (view.known.count(i)) continue;
    const auto it = outcome.recovered.find(i);
    if (it != outcome.recovered.end())
      out << "recovered " << i + 1 << " " << it->second << "\n";
    else
      out << "unresolved " << i + 1 << "\n";
  }
  if (list) {
    const auto candidates = list_attack(code, view);
    out << "candidates " << candidates.size() << "\n";
    for (const Vector& c : candidates) {
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
      out << "\n";
    }
  }
  std::cout << out.str();
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool corrupt) {
  verify::VerifyOptions opt;
  opt.seed = seed;
  opt.corrupt = corrupt;
  const auto results = verify::run(suite, opt);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.name << ": " << r.cases << " cases, " << r.violations << " violations, "
              << (r.passed() ? "pass" : "FAIL") << "\n";
    if (!r.passed()) std::cout << "  counterexample: " << r.counterexample << "\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index coding with side information: schemes, decoding and security analysis"};
  app.set_version_flag("--version", std::string(io::kToolName) + " " + io::kToolVersion);
  app.require_subcommand(1);

  std::string file, messages, broadcast, side, known, suite = "all";
  std::uint64_t seed = 0;
  std::uint64_t verify_seed = verify::kCorpusSeed;
  std::size_t receiver = 0;
  bool sample = false, list = false, corrupt = false;

  auto* analyze = app.add_subcommand("analyze", "Security report for an instance file (JSON on stdout)");
  analyze->add_option("file", file, "Instance file")->required();
  analyze->add_option("--seed", seed, "Seed for sampled mode");
  analyze->add_flag("--sample", sample, "Allow sampling when n is too large for an exhaustive sweep");

  auto* enc = app.add_subcommand("encode", "Broadcast for a message vector");
  enc->add_option("file", file, "Instance file")->required();
  enc->add_option("--messages", messages, "x_1,...,x_n")->required();

  auto* dec = app.add_subcommand("decode", "Receiver j's demanded message");
  dec->add_option("file", file, "Instance file")->required();
  dec->add_option("--receiver", receiver, "Receiver index j (1-based)")->required();
  dec->add_option("--broadcast", broadcast, "s_1,...,s_k")->required();
  dec->add_option("--side", side, "Side values i=v,...")->required();

  auto* att = app.add_subcommand("attack", "Eavesdropper recovery from known messages and the broadcast");
  att->add_option("file", file, "Instance file")->required();
  att->add_option("--known", known, "Known values i=v,... (may be empty)");
  att->add_option("--broadcast", broadcast, "s_1,...,s_k")->required();
  att->add_flag("--list", list, "Also print every consistent message vector");

  auto* ver = app.add_subcommand("verify", "Run a property suite on the built-in corpus");
  ver->add_option("--suite", suite, "thm1|thm2|lemma3|thm3|thm4|all")
      ->check(CLI::IsMember({"thm1", "thm2", "lemma3", "thm3", "thm4", "all"}));
  ver->add_option("--seed", verify_seed, "Corpus seed");
  ver->add_flag("--corrupt", corrupt, "Harness self-test: mutate one fixture entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  configure_workers_from_env();
  try {
    if (*analyze) return cmd_analyze(file, seed, sample);
    if (*enc) return cmd_encode(file, messages);
    if (*dec) return cmd_decode(file, receiver, broadcast, side);
    if (*att) return cmd_attack(file, known, broadcast, list);
    if (*ver) return cmd_verify(suite, verify_seed, corrupt);
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kMalformed;
}
