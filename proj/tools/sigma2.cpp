// sigma2: command line surface for the shift-space and interval-map
// library. Subcommands: tau, schedule, pairscan, witness, turbulence.
// All outputs are deterministic for a fixed command line (or config file);
// decimal renderings are 30 significant digits and non-authoritative.
//
// Exit codes: 0 = success / check passed; 1 = check failed or a guard
// tripped; 2 = usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sigma2/coding.hpp"
#include "sigma2/distance.hpp"
#include "sigma2/errors.hpp"
#include "sigma2/pwl.hpp"
#include "sigma2/schedule.hpp"
#include "sigma2/systems.hpp"
#include "sigma2/tau.hpp"
#include "sigma2/turbulence.hpp"
#include "sigma2/witness.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace sigma2;

// ---- parsing helpers ----

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty()) throw ParseError(0, "empty number");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError(i, "expected a digit");
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
  }
  return v;
}

// ---- config expansion ----
//
// --config FILE is handled before CLI11 ever sees the command line: each
// `key=value` line becomes the flag `--key value` appended to the argument
// list, unless that flag was already given explicitly (flags win). Values
// `true`/`false` toggle bare flags. Lines starting with '#' or ';' are
// comments.

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\''))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

// Flags that name the same option; presence of either blocks the config key.
const std::vector<std::vector<std::string>> kFlagAliases = {{"V", "window"}};

std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::vector<std::string> files;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) {
        throw ParseError(0, "--config needs a file argument");
      }
      files.push_back(args[++i]);
    } else if (a.rfind("--config=", 0) == 0) {
      files.push_back(a.substr(9));
    } else {
      out.push_back(a);
    }
  }

  auto aliases_of = [](const std::string& key) {
    std::vector<std::string> names = {key};
    for (const auto& group : kFlagAliases) {
      for (const auto& n : group) {
        if (n == key) {
          names = group;
          return names;
        }
      }
    }
    return names;
  };
  auto present = [&](const std::string& key) {
    for (const std::string& name : aliases_of(key)) {
      const std::string flag = "--" + name;
      for (const std::string& a : out) {
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
      }
    }
    return false;
  };

  for (const std::string& file : files) {
    std::ifstream in(file);
    if (!in) throw ParseError(0, "cannot open config file: " + file);
    std::string line;
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#' || t[0] == ';') continue;
      std::size_t eq = t.find('=');
      if (eq == std::string::npos) {
        throw ParseError(0, "config line is not key=value: " + t);
      }
      std::string key = trim(t.substr(0, eq));
      while (!key.empty() && key.front() == '-') key.erase(key.begin());
      std::string value = unquote(trim(t.substr(eq + 1)));
      if (key.empty()) throw ParseError(eq, "config line has an empty key");
      if (present(key)) continue;
      if (value == "false") continue;
      out.push_back("--" + key);
      if (value != "true") out.push_back(value);
    }
  }
  return out;
}

// Grammar: const0 | const1 | champ | ep:<pre>:<per> | prefix:<bits>:<rest>
//        | compl:<rest> | shift:<n>:<rest> | tau | tau:<gamma rest>
BitStream parse_stream(const std::string& spec) {
  if (spec == "const0") return BitStream::constant(0);
  if (spec == "const1") return BitStream::constant(1);
  if (spec == "champ") return BitStream::champernowne();
  if (spec == "tau") return tau_stream(TauParams::defaults());
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError(0, "unknown stream rule '" + spec + "'");
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (head == "ep") {
    std::size_t second = rest.find(':');
    if (second == std::string::npos)
      throw ParseError(colon + 1, "ep needs <pre>:<per>");
    Word pre = Word::from_string(rest.substr(0, second));
    Word per = Word::from_string(rest.substr(second + 1));
    return BitStream::eventually_periodic(pre, per);
  }
  if (head == "prefix") {
    std::size_t second = rest.find(':');
    if (second == std::string::npos)
      throw ParseError(colon + 1, "prefix needs <bits>:<stream>");
    Word bits = Word::from_string(rest.substr(0, second));
    return BitStream::prefix_then(bits, parse_stream(rest.substr(second + 1)));
  }
  if (head == "compl") return complement(parse_stream(rest));
  if (head == "shift") {
    std::size_t second = rest.find(':');
    if (second == std::string::npos)
      throw ParseError(colon + 1, "shift needs <n>:<stream>");
    std::uint64_t n = parse_u64(rest.substr(0, second));
    return shift(parse_stream(rest.substr(second + 1)), n);
  }
  if (head == "tau") {
    TauParams p = TauParams::defaults();
    p.gamma = parse_stream(rest);
    return tau_stream(p);
  }
  throw ParseError(0, "unknown stream rule '" + head + "'");
}

struct MapSpec {
  std::optional<PwlMap> pwl;
  std::optional<Rat> mu;
  std::string display;

  IntervalMap to_interval() const {
    if (pwl) return IntervalMap::pwl(*pwl, display);
    return IntervalMap::logistic(*mu);
  }
  const PwlMap& require_pwl() const {
    if (!pwl)
      throw ArgumentError("this command needs a piecewise linear map");
    return *pwl;
  }
};

// Grammar: tent | g | h | logistic:<mu> | pwl:<x,y;x,y;...>
MapSpec parse_map(const std::string& spec) {
  MapSpec out;
  out.display = spec;
  if (spec == "tent") {
    out.pwl = make_tent();
    return out;
  }
  if (spec == "g") {
    out.pwl = make_g();
    return out;
  }
  if (spec == "h") {
    out.pwl = make_h();
    return out;
  }
  if (spec.rfind("logistic:", 0) == 0) {
    out.mu = parse_rat(spec.substr(9));
    return out;
  }
  if (spec.rfind("pwl:", 0) == 0) {
    std::vector<PwlNode> nodes;
    for (const std::string& part : split(spec.substr(4), ';')) {
      auto xy = split(part, ',');
      if (xy.size() != 2) throw ParseError(0, "pwl node needs x,y");
      nodes.push_back({parse_rat(xy[0]), parse_rat(xy[1])});
    }
    out.pwl = PwlMap(nodes);
    return out;
  }
  throw ParseError(0, "unknown map '" + spec + "'");
}

RationalInterval parse_window(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 2) throw ParseError(0, "window needs lo,hi");
  return RationalInterval(parse_rat(parts[0]), parse_rat(parts[1]));
}

// ---- rendering helpers ----

std::string rat_str(const Rat& v) { return v.get_str(); }

std::string segment_brief(const SegmentRef& ref) {
  std::ostringstream os;
  switch (ref.kind) {
    case SegmentKind::Prefix:
      os << "Prefix(index=" << ref.index << ")";
      break;
    case SegmentKind::AlphaCopy:
      os << "AlphaCopy(m=" << ref.stage << ", index=" << ref.index << ")";
      break;
    case SegmentKind::GammaRepeat:
      os << "GammaRepeat(m=" << ref.stage << ", symbol=" << ref.symbol << ")";
      break;
    case SegmentKind::PatternTail:
      os << "PatternTail(m=" << ref.stage << ", r=" << ref.run << ")";
      break;
    case SegmentKind::BhatFirstHalf:
      os << "BhatFirstHalf(m=" << ref.stage << ", i=" << ref.family_index
         << ")";
      break;
    case SegmentKind::BhatSecondHalf:
      os << "BhatSecondHalf(m=" << ref.stage << ", i=" << ref.family_index
         << ")";
      break;
  }
  return os.str();
}

std::string segment_detail(const SegmentRef& ref) {
  std::ostringstream os;
  switch (ref.kind) {
    case SegmentKind::Prefix:
    case SegmentKind::AlphaCopy:
    case SegmentKind::GammaRepeat:
      return segment_brief(ref);
    case SegmentKind::PatternTail:
      os << "PatternTail(m=" << ref.stage << ", r=" << ref.run
         << ", offset=" << ref.pattern_offset << ")";
      break;
    case SegmentKind::BhatFirstHalf:
      os << "BhatFirstHalf(m=" << ref.stage << ", i=" << ref.family_index
         << ", source=" << ref.source << ")";
      break;
    case SegmentKind::BhatSecondHalf:
      os << "BhatSecondHalf(m=" << ref.stage << ", i=" << ref.family_index
         << ", source=" << ref.source << ")";
      break;
  }
  return os.str();
}

json scheduled_json(const ScheduledDistance& d) {
  Rat value(d.numerator, pow2(d.precision));
  value.canonicalize();
  json out;
  out["time"] = d.time;
  out["precision"] = d.precision;
  out["numerator"] = d.numerator.get_str();
  out["value_decimal"] = decimal_string(value, 30);
  out["pass"] = d.pass;
  return out;
}

json witness_json(const WitnessReport& r, bool verified) {
  json out;
  out["found"] = r.found;
  out["system"] = r.system;
  out["candidate"] = r.candidate;
  if (r.candidate_value) out["candidate_value"] = rat_str(*r.candidate_value);
  out["sup"] = rat_str(r.sup_estimate);
  out["sup_decimal"] = decimal_string(r.sup_estimate, 30);
  out["sup_time"] = r.sup_time;
  out["inf"] = rat_str(r.inf_estimate);
  out["inf_decimal"] = decimal_string(r.inf_estimate, 30);
  out["inf_time"] = r.inf_time;
  out["delta"] = rat_str(r.delta);
  out["eps"] = rat_str(r.eps);
  out["horizon"] = r.horizon;
  out["precision"] = r.precision;
  out["candidates_scanned"] = r.candidates_scanned;
  if (r.min_inf_overall) out["min_inf_overall"] = rat_str(*r.min_inf_overall);
  out["verified"] = verified;
  return out;
}

json interval_json(const RationalInterval& iv) {
  return json::array({rat_str(iv.lo), rat_str(iv.hi)});
}

json certificate_json(const TurbulenceCertificate& c) {
  json out;
  out["I0"] = interval_json(c.left);
  out["I1"] = interval_json(c.right);
  out["image0"] = interval_json(c.image_left);
  out["image1"] = interval_json(c.image_right);
  if (c.shared_point) out["shared_point"] = rat_str(*c.shared_point);
  out["lap_pair"] = json::array({c.lap_left, c.lap_right});
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open output file " + out_path);
  f << content;
}

// ---- tau parameter flags shared by tau and schedule ----

struct TauFlags {
  unsigned k = 5;
  std::string prefix;
  std::string gamma = "const0";
  std::string alpha = "champ";
  unsigned max_stage = kMaxStage;

  TauParams build() const {
    TauParams p = TauParams::defaults(k);
    if (!prefix.empty()) p.prefix_b = Word::from_string(prefix);
    p.gamma = parse_stream(gamma);
    p.alpha = parse_stream(alpha);
    p.max_stage = max_stage;
    p.validate();
    return p;
  }
};

void add_tau_flags(CLI::App* cmd, TauFlags& f) {
  cmd->add_option("--k", f.k, "base stage (>= 5)")->capture_default_str();
  cmd->add_option("--prefix", f.prefix, "prefix word b of length k!");
  cmd->add_option("--gamma", f.gamma, "gamma stream rule")
      ->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "alpha stream rule")
      ->capture_default_str();
  cmd->add_option("--max-stage", f.max_stage, "largest materialized stage")
      ->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"shift-space scrambling and interval-map turbulence toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  // --config is expanded before parsing; this sink only documents the flag
  static std::string config_sink;

  // ---------------- tau ----------------
  auto* tau_cmd = app.add_subcommand("tau", "inspect a tau stream");
  tau_cmd->require_subcommand(1);
  static TauFlags tau_flags;
  std::string tau_out;

  auto* tau_dump = tau_cmd->add_subcommand("dump", "print the first L bits");
  static std::uint64_t dump_len = 120;
  add_tau_flags(tau_dump, tau_flags);
  tau_dump->add_option("--len", dump_len, "prefix length")->required();
  tau_dump->add_option("--out", tau_out, "output path (default stdout)");
  tau_dump->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  tau_dump->callback([&] {
    Word w = tau_prefix(tau_flags.build(), dump_len);
    emit(tau_out, w.to_string() + "\n");
  });

  auto* tau_bit_cmd = tau_cmd->add_subcommand("bit", "one bit with its segment");
  static std::uint64_t bit_n = 0;
  add_tau_flags(tau_bit_cmd, tau_flags);
  tau_bit_cmd->add_option("--n", bit_n, "global index")->required();
  tau_bit_cmd->add_option("--out", tau_out, "output path (default stdout)");
  tau_bit_cmd->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  tau_bit_cmd->callback([&] {
    TauParams p = tau_flags.build();
    int b = tau_bit(p, bit_n);
    SegmentRef ref = tau_segment(p, bit_n);
    std::ostringstream os;
    os << "bit " << b << ", segment " << segment_brief(ref) << "\n";
    emit(tau_out, os.str());
  });

  auto* tau_seg_cmd =
      tau_cmd->add_subcommand("segment", "structural region of an index");
  static std::uint64_t seg_n = 0;
  add_tau_flags(tau_seg_cmd, tau_flags);
  tau_seg_cmd->add_option("--n", seg_n, "global index")->required();
  tau_seg_cmd->add_option("--out", tau_out, "output path (default stdout)");
  tau_seg_cmd->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  tau_seg_cmd->callback([&] {
    TauParams p = tau_flags.build();
    SegmentRef ref = tau_segment(p, seg_n);
    std::ostringstream os;
    os << segment_detail(ref) << "\n";
    emit(tau_out, os.str());
  });

  // ---------------- schedule ----------------
  auto* sched = app.add_subcommand("schedule", "scheduled distance checks");
  sched->require_subcommand(1);
  static TauFlags sched_flags;
  static std::string beta = "const1";
  static unsigned sched_m = 6, sched_s = 0, sched_i = 0, sched_j = 0;
  static unsigned sched_precision = 64;
  static bool relax_guard = false, have_ij = false;
  std::string sched_out;

  auto add_sched_common = [&](CLI::App* c) {
    add_tau_flags(c, sched_flags);
    c->add_option("--m", sched_m, "stage")->required();
    c->add_option("--precision", sched_precision, "truncation precision")
        ->capture_default_str();
    c->add_option("--out", sched_out, "output path (default stdout)");
    c->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  };

  auto emit_schedule = [&](const std::string& check,
                           const ScheduledDistance& primary, bool pass,
                           std::optional<ScheduledDistance> secondary) {
    json out;
    out["check"] = check;
    out["m"] = sched_m;
    json p = scheduled_json(primary);
    for (auto& [key, val] : p.items()) out[key] = val;
    out["pass"] = pass;
    if (secondary) out["secondary"] = scheduled_json(*secondary);
    emit(sched_out, out.dump(2) + "\n");
    exit_code = pass ? 0 : 1;
  };

  auto* div_cmd = sched->add_subcommand("divergence", "all-ones run check");
  add_sched_common(div_cmd);
  div_cmd->add_option("--beta", beta, "second gamma stream")
      ->capture_default_str();
  div_cmd->add_option("--s", sched_s, "gamma index where the pair differs")
      ->capture_default_str();
  div_cmd->callback([&] {
    TauParams p = sched_flags.build();
    TauParams q = sched_flags.build();
    q.gamma = parse_stream(beta);
    DivergenceCheck c =
        scheduled_divergence_check(p, q, sched_s, sched_m, sched_precision);
    emit_schedule("divergence", c.at_run_start, c.pass, std::nullopt);
  });

  auto* coin_cmd = sched->add_subcommand("coincidence", "zero-distance check");
  add_sched_common(coin_cmd);
  coin_cmd->add_option("--beta", beta, "second gamma stream")
      ->capture_default_str();
  auto* opt_i = coin_cmd->add_option("--i", sched_i, "first shift");
  coin_cmd->add_option("--j", sched_j, "second shift")->needs(opt_i);
  coin_cmd->callback([&] {
    have_ij = coin_cmd->count("--i") > 0;
    TauParams p = sched_flags.build();
    TauParams q = sched_flags.build();
    q.gamma = parse_stream(beta);
    if (have_ij) {
      CoincidenceCheck c = scheduled_coincidence_check(
          p, q, sched_i, sched_j, sched_m, sched_precision);
      emit_schedule("coincidence-tail", *c.at_pattern_tail, c.pass,
                    c.at_alpha_copy);
    } else {
      CoincidenceCheck c =
          scheduled_coincidence_check(p, q, sched_m, sched_precision);
      emit_schedule("coincidence-alpha", c.at_alpha_copy, c.pass,
                    std::nullopt);
    }
  });

  auto* track_cmd = sched->add_subcommand("tracking", "family tracking check");
  add_sched_common(track_cmd);
  track_cmd->add_option("--i", sched_i, "family index (>= 1)")->required();
  track_cmd->add_option("--j", sched_j, "tracking offset")->required();
  track_cmd->add_flag("--relax-stage-guard", relax_guard,
                      "allow small stages (oracle cross-checks)");
  track_cmd->callback([&] {
    TauParams p = sched_flags.build();
    TrackingCheck c = scheduled_tracking_check(
        p, sched_i, sched_j, sched_m, sched_precision, relax_guard);
    emit_schedule("tracking", c.near, c.pass, c.far);
  });

  // ---------------- pairscan ----------------
  auto* scan = app.add_subcommand("pairscan", "distance series as CSV");
  static std::string scan_x, scan_y, scan_map, scan_out;
  static std::uint64_t scan_n = 16;
  static unsigned scan_precision = 64, scan_parallel = 1;
  static bool scan_report = false;
  static std::string scan_delta = "524287/1048576";
  static std::string scan_eps = "1/1048576";
  scan->add_option("--x", scan_x, "first point (stream rule or rational)")
      ->required();
  scan->add_option("--y", scan_y, "second point")->required();
  scan->add_option("--map", scan_map,
                   "interval map; omit for the shift system");
  scan->add_option("--n", scan_n, "number of iterates")
      ->capture_default_str();
  scan->add_option("--precision", scan_precision,
                   "truncation precision (shift system)")
      ->capture_default_str();
  scan->add_option("--parallel", scan_parallel, "worker count for the scan")
      ->capture_default_str();
  scan->add_flag("--report", scan_report,
                 "emit a JSON max/min digest instead of CSV");
  scan->add_option("--delta", scan_delta, "sup threshold for --report")
      ->capture_default_str();
  scan->add_option("--eps", scan_eps, "inf threshold for --report")
      ->capture_default_str();
  scan->add_option("--out", scan_out, "output path (default stdout)");
  scan->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  scan->callback([&] {
    DistanceSeries series;
    if (scan_map.empty()) {
      series = distance_series(parse_stream(scan_x), parse_stream(scan_y),
                               scan_n, scan_precision, scan_parallel);
    } else {
      series = distance_series(parse_map(scan_map).to_interval(),
                               parse_rat(scan_x), parse_rat(scan_y), scan_n);
    }
    if (scan_report) {
      PairReport r = scrambled_pair_report(series, parse_rat(scan_delta),
                                           parse_rat(scan_eps));
      json out;
      out["max"] = rat_str(r.max);
      out["max_decimal"] = decimal_string(r.max, 30);
      out["argmax"] = r.argmax;
      out["min"] = rat_str(r.min);
      out["min_decimal"] = decimal_string(r.min, 30);
      out["argmin"] = r.argmin;
      out["delta"] = rat_str(r.delta);
      out["eps"] = rat_str(r.eps);
      out["sup_ok"] = r.sup_ok;
      out["inf_ok"] = r.inf_ok;
      out["horizon"] = r.horizon;
      out["precision"] = r.precision;
      emit(scan_out, out.dump(2) + "\n");
      exit_code = (r.sup_ok && r.inf_ok) ? 0 : 1;
      return;
    }
    std::ostringstream os;
    os << "n,numerator,precision,decimal\n";
    for (const auto& [n, d] : series.entries) {
      if (series.precision > 0) {
        Rat scaled = d * pow2(series.precision);
        os << n << "," << scaled.get_num().get_str() << ","
           << series.precision << "," << decimal_string(d, 30) << "\n";
      } else {
        os << n << "," << d.get_num().get_str() << ","
           << d.get_den().get_str() << "," << decimal_string(d, 30) << "\n";
      }
    }
    emit(scan_out, os.str());
  });

  // ---------------- witness ----------------
  auto* wit = app.add_subcommand("witness", "search for a chaos witness");
  static std::string wit_x, wit_map, wit_window, wit_cylinder, wit_out;
  static std::string wit_delta = "524287/1048576", wit_eps = "1/1048576";
  static std::string wit_strategy = "all";
  static std::uint64_t wit_horizon = 100000, wit_seed = 0;
  static unsigned wit_precision = 64;
  wit->add_option("--x", wit_x, "base point (rational or stream rule)")
      ->required();
  wit->add_option("--map", wit_map, "interval map; omit for the shift system");
  wit->add_option("--V,--window", wit_window,
                  "open target window lo,hi (interval maps)");
  wit->add_option("--cylinder", wit_cylinder,
                  "target cylinder word (shift system)");
  wit->add_option("--delta", wit_delta, "scrambling sup threshold")
      ->capture_default_str();
  wit->add_option("--eps", wit_eps, "scrambling inf threshold")
      ->capture_default_str();
  wit->add_option("--horizon", wit_horizon, "scan horizon")
      ->capture_default_str();
  wit->add_option("--precision", wit_precision, "shift metric precision")
      ->capture_default_str();
  wit->add_option("--strategy", wit_strategy,
                  "candidate pools: grid|transport|random|all")
      ->capture_default_str();
  wit->add_option("--seed", wit_seed, "RNG seed for the random pool")
      ->capture_default_str();
  wit->add_option("--out", wit_out, "output path (default stdout)");
  wit->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  wit->callback([&] {
    Rat delta = parse_rat(wit_delta);
    Rat eps = parse_rat(wit_eps);
    WitnessReport r;
    bool verified = false;
    if (wit_map.empty()) {
      if (wit_cylinder.empty())
        throw ArgumentError("shift witness needs --cylinder");
      BitStream x = parse_stream(wit_x);
      Word cyl = Word::from_string(wit_cylinder);
      r = chaos_witness_search(x, cyl, delta, eps, wit_horizon,
                               wit_precision);
      verified = verify_witness_report(x, cyl, r);
    } else {
      if (wit_window.empty())
        throw ArgumentError("interval witness needs --V lo,hi");
      SearchStrategy strat;
      if (wit_strategy == "grid")
        strat = SearchStrategy::Grid;
      else if (wit_strategy == "transport")
        strat = SearchStrategy::Transport;
      else if (wit_strategy == "random")
        strat = SearchStrategy::Random;
      else if (wit_strategy == "all")
        strat = SearchStrategy::All;
      else
        throw ArgumentError("unknown strategy '" + wit_strategy + "'");
      IntervalMap m = parse_map(wit_map).to_interval();
      Rat x = parse_rat(wit_x);
      r = chaos_witness_search(m, x, parse_window(wit_window), delta, eps,
                               wit_horizon, strat, wit_seed);
      verified = r.candidate_value && verify_witness_report(m, x, r);
    }
    emit(wit_out, witness_json(r, verified).dump(2) + "\n");
    exit_code = r.found ? 0 : 1;
  });

  // ---------------- turbulence ----------------
  auto* turb = app.add_subcommand("turbulence", "certificates and pipeline");
  static std::string turb_map, turb_out;
  static bool turb_square = false, turb_pipeline = false;
  static std::string turb_delta = "524287/1048576", turb_eps = "1/1048576";
  static std::uint64_t turb_horizon = 100000, turb_seed = 0;
  turb->add_option("--map", turb_map, "piecewise linear map")->required();
  turb->add_flag("--square", turb_square, "check the second iterate");
  turb->add_flag("--pipeline", turb_pipeline,
                 "witness-then-certificate pipeline on the map");
  turb->add_option("--delta", turb_delta, "pipeline sup threshold")
      ->capture_default_str();
  turb->add_option("--eps", turb_eps, "pipeline inf threshold")
      ->capture_default_str();
  turb->add_option("--horizon", turb_horizon, "pipeline scan horizon")
      ->capture_default_str();
  turb->add_option("--seed", turb_seed, "pipeline window seed")
      ->capture_default_str();
  turb->add_option("--out", turb_out, "output path (default stdout)");
  turb->add_option("--config", config_sink,
               "key=value file merged into the flags (flags win)");
  turb->callback([&] {
    PwlMap base = parse_map(turb_map).require_pwl();
    if (turb_pipeline) {
      PipelineReport rep =
          turbulence_pipeline(base, parse_rat(turb_delta),
                              parse_rat(turb_eps), turb_horizon, turb_seed);
      json out;
      out["map"] = turb_map;
      json fp = json::array();
      for (const Rat& p : rep.fixed.points) fp.push_back(rat_str(p));
      out["fixed_points"] = fp;
      out["identity_segment"] = rep.fixed.has_identity_segment;
      out["base_point"] = rat_str(rep.base_point);
      out["window"] = interval_json(rep.window);
      bool verified =
          rep.witness.candidate_value &&
          verify_witness_report(IntervalMap::pwl(base), rep.base_point,
                                rep.witness);
      out["witness"] = witness_json(rep.witness, verified);
      if (rep.certificate)
        out["certificate"] = certificate_json(*rep.certificate);
      out["outcome"] = outcome_name(rep.outcome);
      emit(turb_out, out.dump(2) + "\n");
      exit_code = rep.outcome == PipelineOutcome::Satisfied ? 0 : 1;
      return;
    }
    PwlMap target = turb_square ? pwl_compose(base, base) : base;
    auto cert = turbulence_check(target);
    json out;
    out["map"] = turb_map;
    out["square"] = turb_square;
    out["laps"] = laps(target).size();
    out["turbulent"] = bool(cert);
    if (cert) {
      json c = certificate_json(*cert);
      for (auto& [key, val] : c.items()) out[key] = val;
    } else {
      out["scope"] = "single-lap pairs";
    }
    emit(turb_out, out.dump(2) + "\n");
    exit_code = cert ? 0 : 1;
  });

  std::vector<std::string> args(argv + 1, argv + argc);
  args = expand_config(std::move(args));
  std::vector<const char*> argp = {argv[0]};
  for (const std::string& a : args) argp.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argp.size()), argp.data());
  } catch (const CLI::ParseError& e) {
    // help/version requests exit 0; genuine usage errors exit 2
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset << ": " << e.what()
              << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // RangeError, DomainEscape, PrecisionError, UnsupportedRule, NoPoint
    std::cerr << "guard: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
