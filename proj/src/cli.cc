// Copyright 2026 The qxor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qxor/cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "qxor/dilation.h"
#include "qxor/errors.h"
#include "qxor/game.h"
#include "qxor/io.h"
#include "qxor/optimize.h"
#include "qxor/strategy.h"

namespace qxor::cli {
namespace {

using io::Json;

Json ComplexJson(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::string FormatComplex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(15) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
    << "i";
  return s.str();
}

std::string DigestOf(const std::vector<std::string>& paths) {
  std::string all;
  for (const std::string& p : paths) all += io::Digest(io::ReadTextFile(p));
  return io::Digest(all);
}

// Runs `body`, mapping library exceptions onto exit codes and diagnostics.
template <typename Body>
RunReport Guarded(RunReport report, std::ostream& err, Body&& body) {
  try {
    body(report);
  } catch (const ParseError& e) {
    report.exit_status = kExitIo;
    report.diagnostic = e.what();
  } catch (const ModelError& e) {
    report.exit_status = kExitValidation;
    report.diagnostic = std::string("commutation: ") + e.what();
  } catch (const EmbeddingError& e) {
    report.exit_status = kExitValidation;
    report.diagnostic = std::string("embedding pattern: ") + e.what();
  } catch (const ValidationError& e) {
    report.exit_status = kExitValidation;
    report.diagnostic = e.what();
  } catch (const ShapeError& e) {
    report.exit_status = kExitValidation;
    report.diagnostic = std::string("size mismatch: ") + e.what();
  } catch (const std::exception& e) {
    report.exit_status = kExitNumerical;
    report.diagnostic = std::string("numerical failure: ") + e.what();
  }
  if (report.exit_status != kExitOk) err << "qxor " << report.command << ": " << report.diagnostic << '\n';
  return report;
}

RunReport NewReport(const char* command) {
  RunReport r;
  r.command = command;
  return r;
}

Correlation AnyCorrelation(const AnyStrategy& s) { return CorrelationOf(s); }

int StrategySize(const AnyStrategy& s) {
  return std::visit([](const auto& x) { return x.n(); }, s);
}

}  // namespace

int DefaultThreads() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("QXOR_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min<int>(threads, static_cast<int>(cap));
  }
  return threads;
}

RunReport CmdValidate(const std::string& game_path, std::ostream& out, std::ostream& err) {
  RunReport report = NewReport("validate");
  report.config = Json{{"game", game_path}};
  return Guarded(std::move(report), err, [&](RunReport& r) {
    r.inputs_digest = DigestOf({game_path});
    const QuantumXorGame g = io::ReadGameFile(game_path);
    const double norm = linalg::TraceNorm(g.matrix());
    r.results = Json{{"n", g.n()}, {"strict", g.strict()}, {"trace_norm", norm}};
    out << std::setprecision(15) << "valid quantum XOR game: n=" << g.n()
        << (g.strict() ? " strict" : " non-strict") << "\ntraceNorm " << norm << '\n';
  });
}

RunReport CmdBias(const std::string& game_path, const std::string& strategy_path,
                  std::ostream& out, std::ostream& err) {
  RunReport report = NewReport("bias");
  report.config = Json{{"game", game_path}, {"strategy", strategy_path}};
  return Guarded(std::move(report), err, [&](RunReport& r) {
    r.inputs_digest = DigestOf({game_path, strategy_path});
    const QuantumXorGame g = io::ReadGameFile(game_path);
    const AnyStrategy s = io::ReadStrategyFile(strategy_path);
    if (StrategySize(s) != g.n()) {
      throw ShapeError("game has n=" + std::to_string(g.n()) + " but strategy has n=" +
                       std::to_string(StrategySize(s)));
    }
    const Complex trace_bias = BiasTrace(g, AnyCorrelation(s));
    r.results["bias_trace"] = ComplexJson(trace_bias);
    out << "bias (Tr(MX))       : " << FormatComplex(trace_bias) << '\n';
    if (const auto* ts = std::get_if<TensorStrategy>(&s)) {
      const Complex direct = BiasDirect(g, *ts);
      const double diff = std::abs(direct - trace_bias);
      r.results["bias_direct"] = ComplexJson(direct);
      r.results["difference"] = diff;
      out << "bias (direct)       : " << FormatComplex(direct) << '\n'
          << "difference          : " << std::setprecision(3) << diff << '\n';
    } else {
      out << "bias (direct)       : n/a for commuting strategies\n";
    }
    const double p = SuccessProbability(trace_bias.real());
    r.results["bias"] = trace_bias.real();
    r.results["p"] = p;
    out << std::setprecision(15) << "bias " << trace_bias.real() << "\np " << p << '\n';
  });
}

RunReport CmdOptimize(const OptimizeOptions& options, std::ostream& out, std::ostream& err) {
  RunReport report = NewReport("optimize");
  report.config = Json{{"game", options.game_path},   {"dimA", options.dim_a},
                       {"dimB", options.dim_b},       {"dims", options.dims},
                       {"restarts", options.restarts}, {"sweeps", options.sweeps},
                       {"tol", options.tol},           {"seed", options.seed},
                       {"threads", options.threads},   {"trace", options.trace_path},
                       {"strategy_out", options.strategy_path}};
  return Guarded(std::move(report), err, [&](RunReport& r) {
    r.inputs_digest = DigestOf({options.game_path});
    const QuantumXorGame g = io::ReadGameFile(options.game_path);
    optimize::SeesawConfig config;
    config.dim_a = options.dim_a;
    config.dim_b = options.dim_b;
    config.restarts = options.restarts;
    config.max_sweeps = options.sweeps;
    config.tol = options.tol;
    config.seed = options.seed;
    config.threads = options.threads;
    config.Validate();

    if (!options.dims.empty()) {
      const auto rows = optimize::DimensionLadder(g, options.dims, config);
      Json table = Json::array();
      out << "d  bestBias           p\n";
      for (const auto& row : rows) {
        const double p = SuccessProbability(std::min(row.best_bias, 1.0));
        out << std::setw(2) << row.dim << "  " << std::setprecision(15) << std::setw(17)
            << row.best_bias << "  " << p << (row.below_previous ? "  (warning: below a smaller d)" : "")
            << '\n';
        if (row.below_previous) {
          err << "warning: d=" << row.dim
              << " scored below a smaller dimension; consider more restarts\n";
        }
        table.push_back(Json{{"d", row.dim}, {"best_bias", row.best_bias}, {"p", p},
                             {"below_previous", row.below_previous}});
      }
      r.results["ladder"] = std::move(table);
      return;
    }

    const optimize::SeesawResult result = optimize::Seesaw(g, config);
    int converged = 0;
    for (const auto& t : result.traces) converged += t.converged ? 1 : 0;
    const double p = SuccessProbability(std::min(result.best_bias, 1.0));
    r.results = Json{{"best_bias", result.best_bias},
                     {"p", p},
                     {"best_restart", result.best_restart},
                     {"converged_restarts", converged},
                     {"wall_seconds", result.wall_seconds}};
    out << std::setprecision(15) << "bestBias " << result.best_bias << "\np " << p
        << "\nrestarts converged: " << converged << "/" << result.traces.size() << '\n';
    if (!options.trace_path.empty()) {
      std::ofstream csv(options.trace_path);
      if (!csv) throw ParseError("cannot write " + options.trace_path);
      io::WriteTraceCsv(csv, result);
      if (!csv) throw ParseError("write failed for " + options.trace_path);
    }
    if (!options.strategy_path.empty()) {
      io::WriteJsonFile(options.strategy_path, io::StrategyToJson(result.best_strategy));
    }
  });
}

RunReport CmdDilate(const DilateOptions& options, std::ostream& out, std::ostream& err) {
  RunReport report = NewReport("dilate");
  report.config = Json{{"strategy", options.strategy_path},
                       {"kind", options.kind},
                       {"out", options.out_path},
                       {"game", options.game_path}};
  return Guarded(std::move(report), err, [&](RunReport& r) {
    std::vector<std::string> inputs{options.strategy_path};
    if (!options.game_path.empty()) inputs.push_back(options.game_path);
    r.inputs_digest = DigestOf(inputs);
    AnyStrategy input = io::ReadStrategyFile(options.strategy_path);
    const std::string& kind = options.kind;
    if (!options.game_path.empty() && kind == "symmetrize") {
      const QuantumXorGame g = io::ReadGameFile(options.game_path);
      input = std::visit([&](const auto& s) -> AnyStrategy { return PhaseAdjust(g, s); }, input);
    }
    const Correlation before = AnyCorrelation(input);
    const CMatrix hermitian_part = 0.5 * (before.x + before.x.adjoint());

    // Target correlation the transform should realise, compared to the output.
    CMatrix expected;
    AnyStrategy output = input;
    if (kind == "observable") {
      output = std::visit(
          [](const auto& s) -> AnyStrategy {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TensorStrategy>) {
              return dilation::ObservableDilationTensor(s);
            } else {
              return dilation::ObservableDilationCommuting(s);
            }
          },
          input);
      expected = hermitian_part;
    } else if (kind == "adjoint") {
      output = std::visit([](const auto& s) -> AnyStrategy { return AdjointStrategy(s); }, input);
      expected = before.x.adjoint();
    } else if (kind == "symmetrize") {
      output = std::visit(
          [](const auto& s) -> AnyStrategy { return dilation::SymmetrizeStrategy(s); }, input);
      expected = hermitian_part;
    } else if (kind == "embed") {
      output = std::visit(
          [](const auto& s) -> AnyStrategy { return dilation::EmbedSelfAdjoint(s).strategy; },
          input);
      expected = dilation::CornerPattern(before).x;
    } else if (kind == "extract") {
      output = std::visit(
          [](const auto& s) -> AnyStrategy {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TensorStrategy>) {
              return dilation::ExtractFromEmbeddingTensor(s);
            } else {
              return dilation::ExtractFromEmbeddingCommuting(s);
            }
          },
          input);
      expected = dilation::CornerBlock(before).x;
    } else {
      throw ValidationError("unknown dilation kind \"" + kind +
                            "\" (expected observable|adjoint|symmetrize|embed|extract)");
    }

    const Correlation after = AnyCorrelation(output);
    const double transform_error = linalg::MaxAbs(after.x - expected);
    const double moved = after.n == before.n ? linalg::MaxAbs(after.x - before.x) : -1.0;
    const bool observable = std::visit(
        [](const auto& s) { return IsObservableStrategy(s); }, output);
    Json checks{{"unitary", true}, {"observable", observable}};
    if (const auto* cs = std::get_if<CommutingStrategy>(&output)) {
      checks["commutation_violation"] = CheckCommuting(*cs);
    }
    if (kind == "embed") checks["corner_pattern_violation"] = dilation::CornerPatternViolation(after);

    r.results = Json{{"kind", kind},
                     {"n_in", before.n},
                     {"n_out", after.n},
                     {"transform_error", transform_error},
                     {"checks", checks}};
    if (moved >= 0.0) r.results["correlation_distance"] = moved;
    if (!options.game_path.empty() && kind == "symmetrize") r.results["phase_adjusted"] = true;
    out << std::setprecision(3) << "kind " << kind << ": n " << before.n << " -> " << after.n
        << '\n';
    if (moved >= 0.0) out << "correlation distance (after vs before) : " << moved << '\n';
    out << "transform error (after vs expected)    : " << transform_error << '\n'
        << "output observable                      : " << (observable ? "yes" : "no") << '\n';
    if (checks.contains("commutation_violation")) {
      out << "commutation violation                  : "
          << checks["commutation_violation"].get<double>() << '\n';
    }
    if (checks.contains("corner_pattern_violation")) {
      out << "corner pattern violation               : "
          << checks["corner_pattern_violation"].get<double>() << '\n';
    }
    if (!options.out_path.empty()) io::WriteJsonFile(options.out_path, io::StrategyToJson(output));
  });
}

RunReport CmdVerify(const verify::VerifyOptions& options, std::ostream& out, std::ostream& err) {
  RunReport report = NewReport("verify");
  report.config = Json{{"n", options.n},
                       {"dims", options.dims},
                       {"trials", options.trials},
                       {"seed", options.seed}};
  return Guarded(std::move(report), err, [&](RunReport& r) {
    const verify::VerifySummary summary = verify::RunAll(options);
    Json props = Json::array();
    for (const auto& p : summary.results) {
      out << (p.passed ? "PASS " : "FAIL ") << std::left << std::setw(46) << p.name << std::right
          << " worst=" << std::setprecision(3) << std::scientific << p.worst
          << " threshold=" << p.threshold << std::defaultfloat << " trials=" << p.trials;
      if (!p.note.empty()) out << "  (" << p.note << ")";
      out << '\n';
      props.push_back(Json{{"name", p.name},
                           {"passed", p.passed},
                           {"worst", std::isfinite(p.worst) ? Json(p.worst) : Json("inf")},
                           {"threshold", p.threshold},
                           {"trials", p.trials},
                           {"seconds", p.seconds},
                           {"note", p.note}});
    }
    out << (summary.all_passed ? "all properties passed" : "some properties FAILED") << " in "
        << std::setprecision(3) << summary.seconds << " s\n";
    r.results = Json{{"properties", std::move(props)},
                     {"all_passed", summary.all_passed},
                     {"seconds", summary.seconds}};
    if (!summary.all_passed) {
      r.exit_status = kExitValidation;
      r.diagnostic = "property suite failed";
    }
  });
}

}  // namespace qxor::cli
