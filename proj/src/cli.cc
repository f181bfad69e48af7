// Copyright 2026 The gpbent Authors.
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

#include "gpb/cli.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "gpb/analysis.h"
#include "gpb/corpus.h"
#include "gpb/decompose.h"
#include "gpb/function_file.h"
#include "gpb/report.h"
#include "gpb/transforms.h"

namespace gpb::cli {
namespace {

enum class Engine { kNaive, kFast };

struct Options {
  std::string input = "-";
  bool json = false;
  Engine engine = Engine::kFast;
  bool cross_check = false;
  bool tables = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  int modulus = 0;
  int arity = 0;
};

// Thrown for conditions that map to kInternalError.
class InternalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw ParseError(0, "'" + path + "' is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

LogicFunction load(const Options& opt) {
  return load_function(read_input(opt.input));
}

SpectrumTable spectrum_for(const LogicFunction& f, const Options& opt) {
  SpectrumTable s = opt.engine == Engine::kFast ? fast_chrestenson(f)
                                                : chrestenson_spectrum(f);
  if (opt.cross_check) {
    const SpectrumTable other = opt.engine == Engine::kFast
                                    ? chrestenson_spectrum(f)
                                    : fast_chrestenson(f);
    if (!(s == other)) {
      throw InternalError("engine mismatch: naive and fast spectra differ");
    }
  }
  return s;
}

AutocorrTable autocorr_for(const LogicFunction& f, const Options& opt) {
  AutocorrTable c = autocorrelation(f);
  if (opt.cross_check && !(c == autocorr_via_spectrum(f))) {
    throw InternalError(
        "engine mismatch: direct and spectral autocorrelation differ");
  }
  return c;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const LogicFunction f = load(opt);
  const SpectrumTable s = spectrum_for(f, opt);
  std::optional<AutocorrTable> c;
  if (opt.tables) c = autocorr_for(f, opt);
  if (opt.json) {
    Json report{{"spectrum", spectrum_json(s)},
                {"engine", opt.engine == Engine::kFast ? "fast" : "naive"},
                {"cross_checked", opt.cross_check}};
    if (c) report["autocorrelation"] = autocorr_json(*c);
    out << dump_report(report);
  } else {
    out << spectrum_text(s);
    if (c) out << '\n' << autocorr_text(*c);
  }
  return kOk;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const LogicFunction f = load(opt);
  const AnalysisReport r = analyze(f);
  if (opt.cross_check) {
    // Recompute the zero counts through the other engines.
    const SpectrumTable s = spectrum_for(f, opt);
    const AutocorrTable c = autocorr_for(f, opt);
    if (count_zeros(s) != r.spectrum_zeros ||
        count_zeros(c) != r.autocorr_zeros) {
      throw InternalError("engine mismatch: zero counts differ");
    }
  }
  if (opt.json) {
    Json report{{"analysis", analysis_json(r)}};
    if (opt.tables) {
      report["spectrum"] = spectrum_json(spectrum_for(f, opt));
      report["autocorrelation"] = autocorr_json(autocorr_for(f, opt));
    }
    out << dump_report(report);
  } else {
    out << analysis_text(r);
    if (opt.tables) {
      out << '\n' << spectrum_text(spectrum_for(f, opt));
      out << '\n' << autocorr_text(autocorr_for(f, opt));
    }
  }
  return kOk;
}

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
  const LogicFunction f = load(opt);
  DecompositionSummary summary{.decomposition = decompose(f),
                               .verified = false,
                               .residual_gbent = std::nullopt};
  summary.verified = verify_decomposition(f, summary.decomposition);
  if (is_prime(f.modulus())) {
    summary.residual_gbent =
        is_generalized_bent(summary.decomposition.residual);
  }
  if (opt.json) {
    out << dump_report(Json{{"decomposition", decomposition_json(summary)}});
  } else {
    out << decomposition_text(summary);
  }
  if (!summary.verified || summary.residual_gbent == false) {
    err << "error: decomposition failed verification\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_census(const Options& opt, std::ostream& out) {
  const Ring ring(opt.modulus);
  const CensusCounts counts = census(ring, opt.arity, opt.cap);
  if (opt.json) {
    out << dump_report(Json{{"census", census_json(ring, opt.arity, counts)}});
  } else {
    out << census_text(ring, opt.arity, counts);
  }
  return counts.inequality_violations == 0 ? kOk : kInternalError;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json, "emit the structured JSON report");
  cmd->add_option("--cap", opt.cap, "enumeration cap (number of functions)");
}

void add_engine(CLI::App* cmd, Options& opt) {
  static const std::map<std::string, Engine> kEngines{
      {"naive", Engine::kNaive}, {"fast", Engine::kFast}};
  cmd->add_option("--engine", opt.engine, "spectrum engine: naive or fast")
      ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));
  cmd->add_flag("--cross-check", opt.cross_check,
                "recompute with the other engine and fail on mismatch");
  cmd->add_flag("--tables", opt.tables,
                "include spectrum and autocorrelation tables");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Exact analysis of Z_N-valued logic functions", "gpbtool"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Chrestenson spectrum");
  auto* analyze_cmd =
      app.add_subcommand("analyze", "bent / partially bent classification");
  auto* decompose_cmd =
      app.add_subcommand("decompose", "split off affine coordinates");
  for (auto* cmd : {spectrum, analyze_cmd, decompose_cmd}) {
    cmd->add_option("input", opt.input, "function file, or - for stdin");
    add_common(cmd, opt);
    add_engine(cmd, opt);
  }
  auto* census_cmd =
      app.add_subcommand("census", "classify every function on Z_N^n");
  census_cmd->add_option("-N,--modulus", opt.modulus, "modulus N")
      ->required()
      ->check(CLI::Range(2, 1 << 20));
  census_cmd->add_option("-n,--arity", opt.arity, "arity n")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(census_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(opt, out);
    if (*analyze_cmd) return cmd_analyze(opt, out);
    if (*decompose_cmd) return cmd_decompose(opt, out, err);
    return cmd_census(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotGpbError& e) {
    err << "error: not generalized partially bent: " << e.what() << '\n';
    return kNotGpb;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what()
        << "; raise --cap or choose a smaller N and n\n";
    return kCapExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const SubgroupViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace gpb::cli
