/*
 * Copyright 2026 The algcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "algcodes/error.hpp"
#include "algcodes/io.hpp"
#include "algcodes/presets.hpp"

namespace algcodes::cli {
namespace {

// Failures that are not library errors: bad flags, unreadable files.
struct Failure : std::runtime_error {
  Failure(const std::string& token, const std::string& what) : std::runtime_error(token + ": " + what) {}
};

constexpr int kUnset = INT_MIN;

struct CodeOptions {
  std::string spec_file;
  std::string preset;
  std::string field;
  std::string kind;
  int m = kUnset;
};

void add_code_options(CLI::App* s, CodeOptions& o) {
  s->add_option("--spec", o.spec_file, "code file written by 'build'");
  s->add_option("--preset", o.preset, "hermitian-q9 | hcrs-q9 | rs-q9");
  s->add_option("--field", o.field, "p,m,c0:c1:...:cm with the primitive polynomial low to high (default 3,2,2:1:1)");
  s->add_option("--kind", o.kind, "hermitian | hcrs | rs, used with --field");
  s->add_option("--m", o.m, "design parameter m (for rs the redundancy is m+1)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("IoError", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Failure("IoError", "cannot write '" + path + "'");
}

CodeSpec load_code(const CodeOptions& o) {
  const std::optional<int> m = o.m == kUnset ? std::nullopt : std::optional<int>(o.m);
  if (!o.spec_file.empty()) {
    if (!o.preset.empty() || !o.kind.empty() || !o.field.empty() || m)
      throw Failure("UsageError", "--spec cannot be combined with --preset, --kind, --field or --m");
    std::istringstream in(slurp(o.spec_file));
    return read_codespec(in);
  }
  if (!o.preset.empty()) {
    if (!o.kind.empty() || !o.field.empty()) throw Failure("UsageError", "--preset cannot be combined with --kind or --field");
    return make_preset(o.preset, m);
  }
  if (!o.kind.empty()) {
    if (!m) throw Failure("UsageError", "--kind needs --m");
    return make_code(o.field.empty() ? Field::gf9() : parse_field(o.field), o.kind, *m);
  }
  throw Failure("UsageError", "one of --spec, --preset or --kind is required");
}

ArrayFile load_array(const CodeSpec& spec, const std::string& path) {
  std::istringstream in(slurp(path));
  return read_array(in, spec.field, uses_line_format(spec));
}

void save_array(const CodeSpec& spec, const std::string& path, const ArrayFile& a) {
  std::ostringstream out;
  write_array(out, a, uses_line_format(spec));
  dump(path, out.str());
}

std::string elt(Elt e) { return e.is_zero() ? "0" : e.log == 0 ? "1" : "a^" + std::to_string(e.log); }

std::string monomial(Monomial m) {
  std::string s;
  if (m.i) s += m.i == 1 ? "x" : "x^" + std::to_string(m.i);
  if (m.j) s += std::string(s.empty() ? "" : " ") + (m.j == 1 ? "y" : "y^" + std::to_string(m.j));
  return s;
}

// Terms from the leading one down; a is the primitive element.
std::string format_poly(const Poly2& p, const MonomialOrder& order) {
  std::vector<Monomial> ms;
  for (const auto& [m, c] : p.terms()) ms.push_back(m);
  order.sort(ms);
  std::reverse(ms.begin(), ms.end());
  std::string s;
  for (Monomial m : ms) {
    const Elt c = p.coeff(m);
    std::string term;
    if (m.i == 0 && m.j == 0)
      term = elt(c);
    else
      term = (c.log == 0 ? "" : elt(c) + " ") + monomial(m);
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

std::string cells(const std::vector<Monomial>& cs) {
  std::string s;
  for (Monomial c : cs) s += " (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
  return s;
}

std::string point(const Point& p) { return "(" + std::to_string(p.x.log) + "," + std::to_string(p.y.log) + ")"; }

void print_basis(std::ostream& out, const std::string& label, const GroebnerBasis& gb) {
  out << "ideal " << label << ": " << gb.elements.size() << " polynomials, order " << gb.order.name() << ", staircase "
      << gb.delta.size() << '\n';
  int idx = 0;
  for (const Poly2& g : gb.elements) {
    const Monomial lead = g.lead(gb.order);
    out << "g" << ++idx << " = " << format_poly(g, gb.order) << '\n';
    out << "  lead (" << lead.i << "," << lead.j << ")\n";
    int rows = 0, cols = 0;
    for (const auto& [m, c] : g.terms()) {
      rows = std::max(rows, m.i + 1);
      cols = std::max(cols, m.j + 1);
    }
    out << "  support (rows i, columns j, -1 = zero):\n";
    for (int i = 0; i < rows; ++i) {
      out << "   ";
      for (int j = 0; j < cols; ++j) out << ' ' << std::setw(2) << g.coeff({i, j}).log;
      out << '\n';
    }
    out << "  terms:";
    for (const auto& [m, c] : g.terms()) out << " (" << m.i << "," << m.j << "):" << c.log;
    out << '\n';
  }
}

std::string kind_line(const CodeSpec& s) {
  std::ostringstream out;
  switch (s.kind) {
    case CodeKind::Curve:
      out << "curve " << format_poly(s.curve->defining_poly(), s.order) << " = 0, a=" << s.curve->a()
          << " b=" << s.curve->b() << " genus=" << s.curve->genus() << ", m=" << s.m;
      break;
    case CodeKind::HCRS:
      out << "hcrs, m=" << s.m;
      break;
    case CodeKind::RS:
      out << "rs, redundancy=" << s.m;
      break;
  }
  return out.str();
}

void cmd_info(const CodeSpec& s, std::ostream& out) {
  out << "field: " << format_field(s.field) << " (q=" << s.field.q() << ")\n";
  out << "kind: " << kind_line(s) << '\n';
  out << "order: " << s.order.name() << '\n';
  out << "n=" << s.n << " k=" << s.k << '\n';
  out << "phi_m: " << s.phi_m.size() << " cells" << cells(s.phi_m.cells()) << '\n';
  out << "max-errors: " << s.max_errors << '\n';
  out << "redundancy points: " << s.wp.size();
  for (int h : s.wp) out << ' ' << point(s.points[h]);
  out << '\n';
  out << "zero points: " << s.zero_points.size();
  for (const Point& p : s.zero_points) out << ' ' << point(p);
  out << '\n';
  out << "basis-wp: " << s.basis_wp.elements.size() << " polynomials, staircase " << s.basis_wp.delta.size() << '\n';
  out << "basis-all: " << s.basis_all.elements.size() << " polynomials, staircase " << s.basis_all.delta.size() << '\n';
}

InfoLayout layout_of(const std::string& mode) {
  if (mode == "systematic") return InfoLayout::Systematic;
  if (mode == "nonsystematic") return InfoLayout::NonSystematic;
  if (mode == "extended") return InfoLayout::Extended;
  throw Failure("UsageError", "unknown mode '" + mode + "'");
}

DecodeMode decode_mode(const std::string& mode) {
  if (mode == "systematic") return DecodeMode::Systematic;
  if (mode == "nonsystematic") return DecodeMode::NonSystematic;
  throw Failure("UsageError", "decoding mode must be systematic or nonsystematic");
}

std::string log_line(const std::vector<Elt>& v) {
  std::string s;
  for (size_t t = 0; t < v.size(); ++t) s += (t ? " " : "") + std::to_string(v[t].log);
  return s;
}

std::vector<Elt> read_syndrome_line(const CodeSpec& spec, const std::string& path) {
  std::istringstream in(slurp(path));
  std::string line;
  std::vector<Elt> out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long v = 0;
    while (ls >> v) {
      if (v < -1 || v >= spec.field.order()) throw Error(ErrorCode::ParseError, "syndrome value out of range");
      out.push_back(Elt{static_cast<int>(v)});
    }
    if (!ls.eof()) throw Error(ErrorCode::ParseError, "bad syndrome token");
  }
  if (out.size() != static_cast<size_t>(spec.phi_m.size()))
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(spec.phi_m.size()) + " syndromes");
  return out;
}

Trial run_trial(const CodeSpec& spec, DecodeMode mode, int errors, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Field& f = spec.field;
  const size_t k = mode == DecodeMode::Systematic ? spec.wp_prime.size() : info_cells(spec).size();
  std::vector<Elt> info(k);
  for (Elt& e : info) e = Elt{rng.below(f.q()) - 1};
  const std::vector<Elt> sent = mode == DecodeMode::Systematic ? encode_systematic(spec, info) : encode_nonsystematic(spec, info);
  std::vector<int> pos(static_cast<size_t>(spec.n));
  for (int h = 0; h < spec.n; ++h) pos[h] = h;
  for (int e = 0; e < errors; ++e) std::swap(pos[e], pos[e + rng.below(spec.n - e)]);
  std::vector<Elt> received = sent;
  for (int e = 0; e < errors; ++e) received[pos[e]] = f.add(received[pos[e]], Elt{rng.below(f.order())});
  Trial t;
  try {
    const DecodeResult r = decode(spec, received, mode);
    t.corrected = r.errors;
    t.outcome = r.codeword == sent && r.info == info ? Outcome::Success : Outcome::Miscorrection;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DecodingFailure) throw;
    t.outcome = Outcome::Failure;
  }
  return t;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Success:
      return "success";
    case Outcome::Failure:
      return "failure";
    case Outcome::Miscorrection:
      return "miscorrection";
  }
  return "?";
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Simulation simulate(const CodeSpec& spec, DecodeMode mode, int errors, int trials, std::uint64_t seed, int threads) {
  if (errors < 0 || errors > spec.n) throw Failure("UsageError", "error count must lie in [0, n]");
  if (trials < 0) throw Failure("UsageError", "trial count must be non-negative");
  Simulation sim;
  sim.trials.resize(static_cast<size_t>(trials));
  std::atomic<int> next{0};
  std::exception_ptr problem;
  std::mutex guard;
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        sim.trials[t] = run_trial(spec, mode, errors, seed + static_cast<std::uint64_t>(t));
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!problem) problem = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(threads, 1, 256);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (problem) std::rethrow_exception(problem);
  for (const Trial& t : sim.trials) {
    sim.success += t.outcome == Outcome::Success;
    sim.failure += t.outcome == Outcome::Failure;
    sim.miscorrection += t.outcome == Outcome::Miscorrection;
  }
  return sim;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::DecodingFailure:
      return 4;
    case ErrorCode::NonGenericSupport:
    case ErrorCode::RankDeficient:
    case ErrorCode::IncompleteCover:
    case ErrorCode::InconsistentKnownValues:
    case ErrorCode::DivisionByZero:
      return 3;
    default:
      return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Encoders and decoders for Hermitian, hyperbolic cascaded Reed-Solomon and Reed-Solomon codes.\n"
      "Array files use log notation (k = a^k, -1 = zero). Grid files have q-1 rows indexed by log x and\n"
      "q-1 columns indexed by log y; Reed-Solomon words are a single line of q-1 positions. Zero-point\n"
      "symbols follow a 'zero-points' line as '(xlog, ylog): vlog'.",
      "algcodes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CodeOptions code;
  std::string in_path, out_path, info_out, mode = "systematic", ideal, syndrome_path, csv_path;
  int errors = 0, trials = 0, threads = 1;
  std::uint64_t seed = 0;

  auto* info = app.add_subcommand("info", "print the parameters of a code");
  add_code_options(info, code);

  auto* build = app.add_subcommand("build", "write a code file for later --spec use");
  add_code_options(build, code);
  build->add_option("--out", out_path, "output code file")->required();

  auto* encode = app.add_subcommand(
      "encode",
      "encode an information array; systematic places symbols at the information points, nonsystematic on the\n"
      "transform cells outside the defining set, extended adds the zero-point trailer");
  add_code_options(encode, code);
  encode->add_option("--mode", mode, "systematic | nonsystematic | extended")->capture_default_str();
  encode->add_option("--in", in_path, "information array file")->required();
  encode->add_option("--out", out_path, "codeword array file; syndromes go to <out>.check")->required();

  auto* decode_cmd = app.add_subcommand("decode", "correct a received word");
  add_code_options(decode_cmd, code);
  decode_cmd->add_option("--mode", mode, "systematic | nonsystematic (information layout)")->capture_default_str();
  decode_cmd->add_option("--in", in_path, "received array file")->required();
  decode_cmd->add_option("--out", out_path, "decoded codeword array file")->required();
  decode_cmd->add_option("--info-out", info_out, "decoded information array file");

  auto* sim = app.add_subcommand("simulate", "random errors through encode and decode");
  add_code_options(sim, code);
  sim->add_option("--mode", mode, "systematic | nonsystematic")->capture_default_str();
  sim->add_option("--errors", errors, "errors per word")->required();
  sim->add_option("--trials", trials, "number of words")->required();
  sim->add_option("--seed", seed, "trial t uses seed + t")->capture_default_str();
  sim->add_option("--threads", threads, "worker threads; results do not depend on it")->capture_default_str();
  sim->add_option("--csv", csv_path, "per-trial CSV output");

  auto* groebner = app.add_subcommand("groebner", "print a Groebner basis");
  add_code_options(groebner, code);
  groebner->add_option("--ideal", ideal, "wp | all | errors")->required();
  groebner->add_option("--syndromes", syndrome_path, "defining-set syndromes, one line as in <out>.check (errors)");
  groebner->add_option("--in", in_path, "received array file whose syndromes are used (errors)");

  std::vector<const char*> argv{"algcodes"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "UsageError: " << e.what() << '\n';
    return 2;
  }

  try {
    const CodeSpec spec = load_code(code);
    if (info->parsed()) {
      cmd_info(spec, out);
    } else if (build->parsed()) {
      std::ostringstream text;
      write_codespec(text, spec);
      dump(out_path, text.str());
      out << "wrote " << out_path << " n=" << spec.n << " k=" << spec.k << '\n';
    } else if (encode->parsed()) {
      const InfoLayout layout = layout_of(mode);
      const auto symbols = array_to_info(spec, load_array(spec, in_path), layout);
      const std::vector<Elt> word = layout == InfoLayout::Systematic      ? encode_systematic(spec, symbols)
                                    : layout == InfoLayout::NonSystematic ? encode_nonsystematic(spec, symbols)
                                                                          : encode_systematic_extended(spec, symbols);
      save_array(spec, out_path, word_to_array(spec, word));
      dump(out_path + ".check",
           "# syndromes on the defining set:" + cells(spec.phi_m.cells()) + "\n" + log_line(parity(spec, word)) + "\n");
      out << "encoded " << mode << " n=" << word.size() << " -> " << out_path << '\n';
    } else if (decode_cmd->parsed()) {
      const DecodeMode dm = decode_mode(mode);
      const auto received = array_to_word(spec, load_array(spec, in_path));
      const DecodeResult r = decode(spec, received, dm);
      save_array(spec, out_path, word_to_array(spec, r.codeword));
      if (!info_out.empty())
        save_array(spec, info_out,
                   info_to_array(spec, r.info, dm == DecodeMode::Systematic ? InfoLayout::Systematic : InfoLayout::NonSystematic));
      out << "decoded errors=" << r.errors << " voted-cells=" << r.voted_cells << '\n';
    } else if (sim->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const Simulation s = simulate(spec, decode_mode(mode), errors, trials, seed, threads);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "trial,seed,outcome,corrected\n";
        for (size_t t = 0; t < s.trials.size(); ++t)
          csv << t << ',' << seed + t << ',' << outcome_name(s.trials[t].outcome) << ',' << s.trials[t].corrected << '\n';
        dump(csv_path, csv.str());
      }
      out << "trials=" << trials << " errors=" << errors << " success=" << s.success << " failure=" << s.failure
          << " miscorrection=" << s.miscorrection << '\n';
      err << "wall-time " << std::fixed << std::setprecision(3) << secs << " s\n";
    } else if (groebner->parsed()) {
      if (ideal == "wp") {
        print_basis(out, "wp", spec.basis_wp);
      } else if (ideal == "all") {
        print_basis(out, "all", spec.basis_all);
      } else if (ideal == "errors") {
        if (syndrome_path.empty() == in_path.empty())
          throw Failure("UsageError", "--ideal errors needs exactly one of --syndromes or --in");
        std::vector<Elt> known = in_path.empty() ? read_syndrome_line(spec, syndrome_path)
                                                 : parity(spec, array_to_word(spec, load_array(spec, in_path)));
        PartialArray partial(spec.field.order());
        for (size_t l = 0; l < known.size(); ++l) partial.set(spec.phi_m.cells()[l], known[l]);
        print_basis(out, "errors", spec.voter->run(partial, spec.max_errors).locator);
      } else {
        throw Failure("UsageError", "--ideal must be wp, all or errors");
      }
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  } catch (const Failure& e) {
    err << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace algcodes::cli
