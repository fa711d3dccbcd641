#include "purecubic/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "purecubic/errors.hpp"
#include "purecubic/field_context.hpp"
#include "purecubic/ideals.hpp"
#include "purecubic/reduced.hpp"
#include "purecubic/sequences.hpp"

namespace purecubic::cli {

namespace {

using nlohmann::json;

struct Outcome {
  std::string out;
  std::string err;
  int status = Ok;
};

std::string point_text(const Vector3& p) {
  return "[" + to_string(p[0]) + ", " + to_string(p[1]) + ", " + to_string(p[2]) + "]";
}

json point_json(const Vector3& p) {
  return json::array({integer_json(p[0]), integer_json(p[1]), integer_json(p[2])});
}

std::string header(const FieldContext& ctx) {
  std::ostringstream s;
  s << "m = " << ctx.m() << " , sigma = " << ctx.sigma() << " , pm = " << ctx.sign()
    << " , k = " << ctx.k() << "\n";
  return s.str();
}

json ideal_record(const FieldContext& ctx, const IdealForm& g) {
  json j = g;
  j["m"] = ctx.m();
  j["N"] = integer_json(g.norm());
  return j;
}

void emit(Outcome& o, const json& record) { o.out += record.dump() + "\n"; }

class Checks {
 public:
  Checks(Outcome& outcome, bool as_json, std::int64_t m) : o_(outcome), json_(as_json), m_(m) {}

  void report(const std::string& name, bool pass, const std::string& detail) {
    if (!pass) o_.status = VerificationFailed;
    if (json_) {
      emit(o_, json{{"m", m_}, {"check", name}, {"pass", pass}, {"detail", detail}});
    } else {
      o_.out += std::string(pass ? "PASS" : "FAIL") + " m = " + std::to_string(m_) + " " + name + " : " +
                detail + "\n";
    }
  }

 private:
  Outcome& o_;
  bool json_;
  std::int64_t m_;
};

std::vector<Integer> selected_lengths(const RunConfig& config, const Integer& upper) {
  Integer last = upper;
  if (config.length) return {Integer(*config.length)};
  if (config.all_lengths_up_to) last = *config.all_lengths_up_to;
  std::vector<Integer> out;
  for (Integer L = 1; L <= last; ++L) out.push_back(L);
  return out;
}

SequenceOptions sequence_options(const RunConfig& config) {
  SequenceOptions opts;
  opts.iteration_cap = config.iteration_cap;
  opts.mode = config.four_corner ? SearchMode::FourCorner : SearchMode::Exhaustive;
  return opts;
}

void check_ideal_test(const FieldContext& ctx, const RunConfig& config, Checks& checks) {
  const long max_a = config.length.value_or(config.all_lengths_up_to.value_or(3));
  long total = 0;
  long disagreements = 0;
  for (Integer a = 1; a <= max_a; ++a) {
    for_each_canonical_form(a, 2 * a, 2 * a, [&](const IdealForm& g) {
      ++total;
      if (is_ideal(g, ctx) != is_ideal_by_closure(g, ctx)) ++disagreements;
    });
  }
  checks.report("ideal-test-vs-closure", disagreements == 0,
                std::to_string(total) + " sextuples with a <= " + std::to_string(max_a) + ", " +
                    std::to_string(disagreements) + " disagreements");
}

// The unpruned scan costs O(L^5) closure tests per length.
constexpr long kUnprunedLengthLimit = 10;

void check_enumeration(const FieldContext& ctx, const std::vector<Integer>& lengths, Checks& checks) {
  long compared = 0;
  long mismatched = 0;
  for (const Integer& L : lengths) {
    if (L > kUnprunedLengthLimit) continue;
    ++compared;
    if (enumerate_primitive_ideals(ctx, L) != enumerate_primitive_ideals_unpruned(ctx, L)) ++mismatched;
  }
  checks.report("primitive-enumeration-vs-unpruned", mismatched == 0,
                std::to_string(compared) + " lengths up to " + std::to_string(kUnprunedLengthLimit) + ", " +
                    std::to_string(mismatched) + " mismatched");
}

void check_reduced_test(const FieldContext& ctx, const std::vector<Integer>& lengths, Checks& checks) {
  long total = 0;
  long disagreements = 0;
  for (const Integer& L : lengths) {
    for (const IdealForm& g : enumerate_primitive_ideals(ctx, L)) {
      ++total;
      if (is_reduced(g, ctx) != oracle_is_reduced(g, ctx)) ++disagreements;
    }
  }
  checks.report("reduced-test-vs-oracle", disagreements == 0,
                std::to_string(total) + " primitive ideals, " + std::to_string(disagreements) +
                    " disagreements");
}

// The four-corner search is not complete, so equality is only reported; the
// check is that no four-corner step beats the exhaustive one.
void check_heuristic(const FieldContext& ctx, const std::vector<SequenceState>& states, Checks& checks) {
  long steps = 0;
  long agree = 0;
  long beaten = 0;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    ++steps;
    std::optional<SequenceState> corner;
    try {
      corner = next_minimal(ctx, states[i], SearchMode::FourCorner);
    } catch (const InternalError&) {
      continue;
    }
    if (corner->point == states[i + 1].point) ++agree;
    if (exact_sign(corner->value - states[i + 1].value) < 0) ++beaten;
  }
  checks.report("exhaustive-dominates-four-corner", beaten == 0,
                std::to_string(steps) + " steps, four-corner agrees at " + std::to_string(agree) + ", beaten at " +
                    std::to_string(beaten));
}

void check_bijection(const FieldContext& ctx, const SequenceResult& result, Checks& checks) {
  const std::vector<IdealForm> reduced = enumerate_reduced(ctx);
  std::vector<IdealForm> images;
  bool in_list = true;
  bool round_trip = true;
  bool well_defined = true;
  bool periodic = true;
  for (std::size_t i = 0; i < result.states.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(result.period);
    if (j < result.states.size() && result.states[i].norm != result.states[j].norm) periodic = false;
  }
  for (const FieldElement& gamma : result.minimal_elements) {
    const IdealForm I = map_F(ctx, result, gamma);
    images.push_back(I);
    if (std::find(reduced.begin(), reduced.end(), I) == reduced.end()) in_list = false;
    const FieldElement eta = scale(Rational(denominator_length(ctx, gamma)), invert(ctx, gamma));
    const FieldElement back = map_G(ctx, result, I, eta);
    if (back != gamma || map_F(ctx, result, back) != I) round_trip = false;
    if (map_G(ctx, result, I, multiply(ctx, eta, result.fundamental_unit)) != back) well_defined = false;
  }
  std::vector<IdealForm> sorted = images;
  std::sort(sorted.begin(), sorted.end(), listing_order);
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  const std::string count = std::to_string(images.size()) + " minimal elements";
  checks.report("norm-sequence-periodic", periodic, "period " + std::to_string(result.period));
  checks.report("F-injective", injective, count);
  checks.report("F-image-reduced", in_list, count + ", " + std::to_string(reduced.size()) + " reduced ideals");
  checks.report("G-inverts-F", round_trip, count);
  checks.report("G-well-defined", well_defined, count);
}

void run_ideals(const FieldContext& ctx, const RunConfig& config, Outcome& o) {
  if (!config.json) o.out += header(ctx);
  const std::vector<Integer> lengths = selected_lengths(config, upper_bound_length(ctx));
  for (const Integer& L : lengths) {
    for (const IdealForm& g : enumerate_primitive_ideals(ctx, L)) {
      if (config.json) {
        emit(o, ideal_record(ctx, g));
      } else {
        o.out += "Primitive Ideal " + g.to_text() + ", with N = " + to_string(g.norm()) + "\n";
      }
    }
  }
  if (config.verify) {
    Checks checks(o, config.json, ctx.m());
    check_enumeration(ctx, lengths, checks);
  }
}

void run_reduced(const FieldContext& ctx, const RunConfig& config, Outcome& o) {
  const Integer upper = upper_bound_length(ctx);
  if (!config.json) o.out += header(ctx) + "maxL= " + to_string(upper) + "\n";
  const std::vector<Integer> lengths = selected_lengths(config, upper);
  std::vector<IdealForm> reduced;
  if (config.length || config.all_lengths_up_to) {
    for (const Integer& L : lengths)
      for (const IdealForm& g : enumerate_primitive_ideals(ctx, L))
        if (is_reduced(g, ctx)) reduced.push_back(g);
  } else {
    reduced = enumerate_reduced(ctx);
  }
  for (const IdealForm& g : reduced) {
    if (config.json) {
      emit(o, ideal_record(ctx, g));
    } else {
      o.out += "Reduced ideal: " + g.to_text() + " has norm N = " + to_string(g.norm()) + "\n";
    }
  }
  if (config.verify) {
    Checks checks(o, config.json, ctx.m());
    check_reduced_test(ctx, lengths, checks);
  }
}

void emit_state(const FieldContext& ctx, const SequenceState& s, const RunConfig& config, Outcome& o) {
  if (config.json) {
    emit(o, json{{"m", ctx.m()}, {"n", s.n}, {"P", point_json(s.point)}, {"N", integer_json(s.norm)}});
  } else {
    o.out += point_text(s.point) + " ,   Val= " + s.a(ctx).to_decimal(config.digits) +
             " , Sh= " + s.b(ctx).to_decimal(config.digits) + " , N= " + to_string(s.norm) + "\n";
  }
}

void emit_unit(const FieldContext& ctx, const SequenceResult& r, const RunConfig& config, Outcome& o) {
  const Vector3 unit = r.fundamental_unit.integer_coordinates();
  const std::string value = val(ctx, r.fundamental_unit).to_decimal(config.digits);
  if (config.json) {
    emit(o, json{{"m", ctx.m()}, {"period", r.period}, {"epsilon0", point_json(unit)}, {"value", value}});
  } else {
    o.out += "epsilon0 = " + point_text(unit) + " ,   Val= " + value + " , period l = " +
             std::to_string(r.period) + "\n";
  }
}

void run_sequence(const FieldContext& ctx, const RunConfig& config, Outcome& o) {
  if (!config.json) o.out += header(ctx);
  const SequenceOptions opts = sequence_options(config);
  std::vector<SequenceState> states;
  std::optional<SequenceResult> result;
  if (config.max_z && !config.until_period) {
    states = minimal_sequence_below(ctx, Integer(*config.max_z), opts);
  } else {
    result = detect_period(ctx, opts);
    states.assign(result->states.begin(), result->states.begin() + result->period + 1);
  }
  for (const SequenceState& s : states) emit_state(ctx, s, config, o);
  if (result) emit_unit(ctx, *result, config, o);
  if (config.verify) {
    Checks checks(o, config.json, ctx.m());
    const std::vector<SequenceState> reference =
        config.four_corner ? minimal_sequence(ctx, static_cast<long>(states.size()), {SearchMode::Exhaustive,
                                                                                      config.iteration_cap})
                           : states;
    check_heuristic(ctx, reference, checks);
  }
}

void run_unit(const FieldContext& ctx, const RunConfig& config, Outcome& o) {
  if (!config.json) o.out += header(ctx);
  emit_unit(ctx, detect_period(ctx, sequence_options(config)), config, o);
}

void run_verify(const FieldContext& ctx, const RunConfig& config, Outcome& o) {
  if (!config.json) o.out += header(ctx);
  Checks checks(o, config.json, ctx.m());
  const std::vector<Integer> lengths = selected_lengths(config, upper_bound_length(ctx));
  check_ideal_test(ctx, config, checks);
  check_enumeration(ctx, lengths, checks);
  check_reduced_test(ctx, lengths, checks);
  SequenceOptions opts = sequence_options(config);
  opts.mode = SearchMode::Exhaustive;
  const SequenceResult result = detect_period(ctx, opts);
  check_heuristic(ctx, result.states, checks);
  check_bijection(ctx, result, checks);
}

Outcome run_one(const RunConfig& config, std::int64_t m, bool sweep) {
  Outcome o;
  const auto factored = validate_and_factor(m);
  if (const auto* rejection = std::get_if<Rejection>(&factored)) {
    if (sweep) {
      if (config.json) {
        emit(o, json{{"m", m}, {"rejected", rejection->message()}});
      } else {
        o.out += rejection->message() + "\n";
      }
    } else {
      o.err += rejection->message() + "\n";
      o.status = InvalidField;
    }
    return o;
  }
  try {
    const FieldContext ctx = FieldContext::build(m);
    switch (config.command) {
      case Command::Ideals: run_ideals(ctx, config, o); break;
      case Command::Reduced: run_reduced(ctx, config, o); break;
      case Command::Sequence: run_sequence(ctx, config, o); break;
      case Command::Unit: run_unit(ctx, config, o); break;
      case Command::Verify: run_verify(ctx, config, o); break;
    }
  } catch (const IterationCapExceeded& e) {
    o.err += "m = " + std::to_string(m) + " : " + e.what() + "\n";
    o.status = CapExhausted;
  } catch (const PrecisionExhausted& e) {
    o.err += "m = " + std::to_string(m) + " : " + e.what() + "\n";
    o.status = CapExhausted;
  }
  return o;
}

int combine(int a, int b) {
  auto rank = [](int s) {
    switch (s) {
      case InvalidField: return 3;
      case CapExhausted: return 2;
      case VerificationFailed: return 1;
      default: return 0;
    }
  };
  return rank(b) > rank(a) ? b : a;
}

std::optional<long> env_long(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0') return std::nullopt;
  return v;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "ideals") return Command::Ideals;
  if (name == "reduced") return Command::Reduced;
  if (name == "sequence") return Command::Sequence;
  if (name == "unit") return Command::Unit;
  if (name == "verify") return Command::Verify;
  return std::nullopt;
}

void apply_environment(RunConfig& config) {
  if (auto v = env_long("PURECUBIC_PRECISION_CAP")) config.precision_cap = static_cast<unsigned>(*v);
  if (auto v = env_long("PURECUBIC_ITERATION_CAP")) config.iteration_cap = *v;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.precision_cap < 64) {
    err << "precision cap must be at least 64 bits\n";
    return InvalidField;
  }
  if (config.m < 1 || (config.m_max && *config.m_max < config.m)) {
    err << "m must be a positive integer and m-max at least m\n";
    return InvalidField;
  }
  set_default_precision_cap(config.precision_cap);

  std::vector<std::int64_t> moduli;
  for (std::int64_t m = config.m; m <= config.m_max.value_or(config.m); ++m) moduli.push_back(m);
  const bool sweep = config.m_max.has_value();

  std::vector<Outcome> outcomes(moduli.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < moduli.size(); i = next++) outcomes[i] = run_one(config, moduli[i], sweep);
  };
  const std::size_t workers =
      std::min<std::size_t>(moduli.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = Ok;
  bool failed = false;
  for (const Outcome& o : outcomes) {
    out << o.out;
    err << o.err;
    status = combine(status, o.status);
    failed = failed || o.status == VerificationFailed;
  }
  if (config.command == Command::Verify || config.verify) {
    if (config.json) {
      out << json{{"verify", failed ? "FAIL" : "PASS"}}.dump() << "\n";
    } else {
      out << "verify: " << (failed ? "FAIL" : "PASS") << "\n";
    }
  }
  return status;
}

}  // namespace purecubic::cli
