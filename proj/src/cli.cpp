#include "seqpat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqpat/approx.hpp"
#include "seqpat/errors.hpp"
#include "seqpat/generator.hpp"
#include "seqpat/oracle.hpp"
#include "seqpat/periodic.hpp"
#include "seqpat/surprise.hpp"

namespace seqpat {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return std::move(buf).str();
}

// Floats are rendered with six decimal places (tsv) or rounded to the
// sixth place (jsonl, where numbers cannot carry trailing zeros).
double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Where result lines go: --output PATH, or the caller's stream.
class sink {
public:
  sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct io_opts {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "jsonl";
};

void add_io(CLI::App* sub, io_opts& io, bool with_input = true) {
  if (with_input) {
    sub->add_option("--input", io.inputs, "sequence file (tokens, '#' comments)")->required();
  }
  sub->add_option("--output", io.output, "write results here instead of stdout");
  sub->add_option("--format", io.format, "output format")
      ->check(CLI::IsMember({"jsonl", "tsv"}))
      ->capture_default_str();
}

const std::string& single_input(const io_opts& io) {
  if (io.inputs.size() != 1) throw ConfigError("expected exactly one --input file");
  return io.inputs.front();
}

std::size_t parse_count(const std::string& text, const char* what) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError(std::string("bad --plant ") + what + ": '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

double parse_rate(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError("bad --plant noise rate: '" + text + "'");
  }
  return v;
}

// SYMS@PERIOD@START@REPS@NOISE; SYMS is a comma-separated slot list that
// is right-padded with wildcards up to PERIOD.
Plant parse_plant(const std::string& text, const Alphabet& alphabet) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '@') {
      parts.push_back(text.substr(from, i - from));
      from = i + 1;
    }
  }
  if (parts.size() != 5) {
    throw ConfigError("--plant must look like SYMS@PERIOD@START@REPS@NOISE");
  }
  std::vector<Pattern::Slot> slots;
  try {
    slots = parse_pattern(parts[0], alphabet).slots();
  } catch (const SeqpatError& e) {
    throw ConfigError(std::string("bad --plant symbols: ") + e.what());
  }
  const std::size_t period = parse_count(parts[1], "period");
  if (slots.size() > period) {
    throw ConfigError("--plant lists more symbols than the period holds");
  }
  slots.resize(period, std::nullopt);
  Plant plant{Pattern{std::move(slots)}, parse_count(parts[2], "start"),
              parse_count(parts[3], "reps"), parse_rate(parts[4])};
  return plant;
}

void emit_periodic(const std::vector<PeriodicResult>& results, const Alphabet& alphabet,
                   const std::string& format, std::ostream& os) {
  for (const auto& r : results) {
    if (format == "tsv") {
      os << render_pattern(r.pattern, alphabet) << '\t' << r.pattern.period() << '\t'
         << r.best.total_reps << '\t';
      for (std::size_t i = 0; i < r.best.segments.size(); ++i) {
        if (i) os << ';';
        os << r.best.segments[i].start << ':' << r.best.segments[i].reps;
      }
      os << '\n';
    } else {
      ordered_json rec;
      rec["pattern"] = render_pattern(r.pattern, alphabet);
      rec["period"] = r.pattern.period();
      rec["total_reps"] = r.best.total_reps;
      auto segs = ordered_json::array();
      for (const Segment& g : r.best.segments) segs.push_back({g.start, g.reps});
      rec["segments"] = std::move(segs);
      os << rec.dump() << '\n';
    }
  }
}

void emit_scored(const std::vector<ScoredPattern>& results, const Alphabet& alphabet,
                 const std::string& format, std::ostream& os) {
  for (const auto& r : results) {
    if (format == "tsv") {
      os << render_pattern(r.pattern, alphabet) << '\t' << r.support << '\t' << fixed6(r.info)
         << '\t' << fixed6(r.gain) << '\n';
    } else {
      ordered_json rec;
      rec["pattern"] = render_pattern(r.pattern, alphabet);
      rec["support"] = r.support;
      rec["info"] = round6(r.info);
      rec["gain"] = round6(r.gain);
      os << rec.dump() << '\n';
    }
  }
}

void emit_approx(const std::vector<ApproxResult>& results, const Alphabet& alphabet,
                 const std::string& format, std::ostream& os) {
  for (const auto& r : results) {
    if (format == "tsv") {
      os << render_pattern(r.pattern, alphabet) << '\t' << fixed6(r.aggregate) << '\n';
    } else {
      ordered_json rec;
      rec["pattern"] = render_pattern(r.pattern, alphabet);
      rec["match"] = round6(r.aggregate);
      os << rec.dump() << '\n';
    }
  }
}

void emit_report(const Pattern& p, const MatchReport& report, const Alphabet& alphabet,
                 const std::string& format, std::ostream& os) {
  if (format == "tsv") {
    os << render_pattern(p, alphabet) << '\t' << fixed6(report.aggregate) << '\t'
       << report.exact_support << '\t';
    for (std::size_t i = 0; i < report.per_sequence.size(); ++i) {
      if (i) os << ';';
      os << fixed6(report.per_sequence[i]);
    }
    os << '\n';
  } else {
    ordered_json rec;
    rec["pattern"] = render_pattern(p, alphabet);
    rec["match"] = round6(report.aggregate);
    rec["exact_support"] = report.exact_support;
    auto values = ordered_json::array();
    for (const double v : report.per_sequence) values.push_back(round6(v));
    rec["per_sequence"] = std::move(values);
    os << rec.dump() << '\n';
  }
}

void emit_oracle_match(const Pattern& p, const std::vector<double>& values,
                       const Alphabet& alphabet, const std::string& format, std::ostream& os) {
  double best = 0.0;
  for (const double v : values) best = std::max(best, v);
  if (format == "tsv") {
    os << render_pattern(p, alphabet) << '\t' << fixed6(best) << '\t';
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) os << ';';
      os << fixed6(values[i]);
    }
    os << '\n';
  } else {
    ordered_json rec;
    rec["pattern"] = render_pattern(p, alphabet);
    rec["match"] = round6(best);
    auto vals = ordered_json::array();
    for (const double v : values) vals.push_back(round6(v));
    rec["values"] = std::move(vals);
    os << rec.dump() << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mines periodic, surprising, and approximate patterns in symbol sequences"};
  app.name("seqpat");
  app.require_subcommand(1);

  io_opts per_io, sur_io, apx_io, gen_io, ope_io, osu_io, oma_io;

  auto* periodic = app.add_subcommand("periodic", "mine partial periodic patterns");
  PeriodicConfig per_cfg;
  add_io(periodic, per_io);
  periodic->add_option("--min-rep", per_cfg.min_rep, "minimum repetitions per segment")
      ->capture_default_str();
  periodic->add_option("--max-dist", per_cfg.max_dist, "maximum gap between segments")
      ->capture_default_str();
  periodic->add_option("--max-period", per_cfg.l_max, "largest period to consider")
      ->capture_default_str();

  auto* surprise = app.add_subcommand("surprise", "mine patterns by information gain");
  double min_gain = 0.0;
  std::size_t top_k = 0;
  std::size_t sur_max_len = 1;
  add_io(surprise, sur_io);
  auto* opt_min_gain =
      surprise->add_option("--min-gain", min_gain, "keep patterns with at least this gain");
  auto* opt_top_k = surprise->add_option("--top-k", top_k, "keep only the k best patterns");
  opt_min_gain->excludes(opt_top_k);
  opt_top_k->excludes(opt_min_gain);
  surprise->add_option("--max-len", sur_max_len, "longest pattern to consider")
      ->capture_default_str();

  auto* approx = app.add_subcommand("approx", "mine approximate patterns under a noise matrix");
  std::string apx_matrix;
  std::string apx_report;
  ApproxConfig apx_cfg;
  add_io(approx, apx_io);
  approx->add_option("--matrix", apx_matrix, "compatibility matrix CSV")->required();
  approx->add_option("--min-match", apx_cfg.min_match, "aggregate match threshold")->required();
  approx->add_option("--max-len", apx_cfg.max_len, "longest pattern to consider")
      ->capture_default_str();
  approx->add_option("--report", apx_report,
                     "report match and exact support for this pattern instead of mining");

  auto* gen = app.add_subcommand("gen", "generate a synthetic sequence");
  GeneratorSpec gen_spec;
  std::vector<std::string> plant_specs;
  add_io(gen, gen_io, false);
  gen->add_option("--alphabet-size", gen_spec.alphabet_size, "number of distinct symbols")
      ->required();
  gen->add_option("--length", gen_spec.length, "sequence length")->required();
  gen->add_option("--seed", gen_spec.seed, "engine seed")->capture_default_str();
  gen->add_option("--plant", plant_specs, "SYMS@PERIOD@START@REPS@NOISE (repeatable)");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference implementations");
  oracle->require_subcommand(1);

  auto* ope = oracle->add_subcommand("periodic", "exhaustive periodic mining");
  PeriodicConfig ope_cfg;
  add_io(ope, ope_io);
  ope->add_option("--min-rep", ope_cfg.min_rep, "minimum repetitions per segment")
      ->capture_default_str();
  ope->add_option("--max-dist", ope_cfg.max_dist, "maximum gap between segments")
      ->capture_default_str();
  ope->add_option("--max-period", ope_cfg.l_max, "largest period to consider")
      ->capture_default_str();

  auto* osu = oracle->add_subcommand("surprise", "exact scores for every pattern");
  std::size_t osu_max_len = 1;
  add_io(osu, osu_io);
  osu->add_option("--max-len", osu_max_len, "longest pattern to consider")
      ->capture_default_str();

  auto* oma = oracle->add_subcommand("match", "every subsequence value for one pattern");
  std::string oma_matrix;
  std::string oma_pattern;
  add_io(oma, oma_io);
  oma->add_option("--matrix", oma_matrix, "compatibility matrix CSV")->required();
  oma->add_option("--pattern", oma_pattern, "comma-separated symbols")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*periodic) {
      const ParsedSequence ps = parse_sequence(read_file(single_input(per_io)));
      const auto results = mine_periodic(ps.sequence, per_cfg);
      sink s(per_io.output, out);
      emit_periodic(results, ps.alphabet, per_io.format, s.stream());
    } else if (*surprise) {
      const ParsedSequence ps = parse_sequence(read_file(single_input(sur_io)));
      SurpriseConfig cfg;
      cfg.max_len = sur_max_len;
      if (opt_top_k->count() > 0) {
        cfg.top_k = top_k;
      } else {
        cfg.min_gain = min_gain;
      }
      const auto results = mine_surprising(ps.sequence, cfg);
      sink s(sur_io.output, out);
      emit_scored(results, ps.alphabet, sur_io.format, s.stream());
    } else if (*approx) {
      const LoadedMatrix lm = load_matrix(read_file(apx_matrix));
      if (apx_io.inputs.empty()) throw ConfigError("expected at least one --input file");
      std::vector<SymbolSequence> db;
      for (const auto& path : apx_io.inputs) {
        db.push_back(parse_sequence(read_file(path), lm.alphabet));
      }
      sink s(apx_io.output, out);
      if (!apx_report.empty()) {
        const Pattern p = parse_pattern(apx_report, lm.alphabet);
        const MatchReport report = match_and_support_report(p, db, lm.matrix);
        emit_report(p, report, lm.alphabet, apx_io.format, s.stream());
      } else {
        const auto results = mine_approximate(db, lm.matrix, apx_cfg);
        emit_approx(results, lm.alphabet, apx_io.format, s.stream());
      }
    } else if (*gen) {
      const Alphabet alphabet = default_alphabet(gen_spec.alphabet_size);
      for (const auto& text : plant_specs) {
        gen_spec.plants.push_back(parse_plant(text, alphabet));
      }
      const SymbolSequence seq = generate_synthetic(gen_spec);
      sink s(gen_io.output, out);
      s.stream() << render_sequence(seq, alphabet) << '\n';
    } else if (*ope) {
      const ParsedSequence ps = parse_sequence(read_file(single_input(ope_io)));
      const auto results = oracle_periodic(ps.sequence, ope_cfg);
      sink s(ope_io.output, out);
      emit_periodic(results, ps.alphabet, ope_io.format, s.stream());
    } else if (*osu) {
      const ParsedSequence ps = parse_sequence(read_file(single_input(osu_io)));
      const auto results = oracle_info_gain(ps.sequence, osu_max_len);
      sink s(osu_io.output, out);
      emit_scored(results, ps.alphabet, osu_io.format, s.stream());
    } else if (*oma) {
      const LoadedMatrix lm = load_matrix(read_file(oma_matrix));
      const SymbolSequence seq = parse_sequence(read_file(single_input(oma_io)), lm.alphabet);
      const Pattern p = parse_pattern(oma_pattern, lm.alphabet);
      const auto values = oracle_match_values(p, seq, lm.matrix);
      sink s(oma_io.output, out);
      emit_oracle_match(p, values, lm.alphabet, oma_io.format, s.stream());
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const SeqpatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace seqpat
