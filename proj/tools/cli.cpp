#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "h2/sweep.hpp"

namespace h2::cli {
namespace {

namespace fs = std::filesystem;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CaseParams parse_case(const RunConfig& config) {
  if (config.map.empty()) throw BadInput("--map is required");
  if (config.conj.empty()) throw BadInput("--conj is required");
  const Lft raw = parse_lft(config.map);
  if (!lft_is_self_map(raw)) throw BadInput("map " + config.map + " is not a self-map of the disk");
  const ConjugationSpec conj = parse_conjugation(config.conj);
  const cplx beta = parse_complex(config.beta);
  if (std::abs(beta) == 0.0) throw BadInput("--beta must be nonzero");
  return CaseParams{raw, conj, config.weighted, beta};
}

VerifyOptions options_from(const RunConfig& config) {
  if (config.grid_n < 8) throw BadInput("--grid must be at least 8");
  VerifyOptions o;
  o.grid_n = config.grid_n;
  o.truncations.clear();
  for (const long n : config.truncations) {
    if (n < 2) throw BadInput("--trunc entries must be at least 2");
    o.truncations.push_back(n);
  }
  if (o.truncations.empty()) throw BadInput("--trunc needs at least one size");
  return o;
}

bool output_path_writable(const std::string& path) {
  const fs::path p(path);
  std::error_code ec;
  if (fs::is_directory(p, ec)) return false;
  const fs::path parent = p.has_parent_path() ? p.parent_path() : fs::path(".");
  return fs::is_directory(parent, ec);
}

/// Writes text to --out (when given) and to the stream; false if the file cannot be written.
bool emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out.empty()) {
    std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
    if (!f) return false;
    f << text;
    if (!f) return false;
  }
  out << text;
  return true;
}

void dump_matrices(const CaseParams& params, const VerifyOptions& options, std::ostream& err) {
  const char* dir = std::getenv("CNORMAL_DUMP_DIR");
  if (dir == nullptr || *dir == '\0') return;
  Eigen::Index n = 0;
  for (const Eigen::Index t : options.truncations) n = std::max(n, t);
  const fs::path base(dir);
  std::ofstream t_file(base / "operator.csv");
  std::ofstream c_file(base / "conjugation.csv");
  if (!t_file || !c_file) {
    err << "warning: cannot write matrix dump to " << dir << '\n';
    return;
  }
  write_matrix_csv(t_file, operator_matrix(params, n));
  write_matrix_csv(c_file, conjugation_operator(params.conj, n).matrix());
}

std::string lower_tag(const std::string& conj) {
  const std::size_t colon = conj.find(':');
  return conj.substr(0, colon);
}

}  // namespace

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "csv") throw BadInput("--format must be json or csv");
    if (!config.out.empty() && !output_path_writable(config.out)) {
      throw BadInput("cannot write to " + config.out);
    }
    const CaseParams params = parse_case(config);
    const bool verdict = predicate(params);
    const double violation = case_violation(params);
    std::string text;
    if (config.format == "csv") {
      std::ostringstream s;
      s << "case,verdict,violation\n" << to_string(params.id()) << ',' << (verdict ? "true" : "false") << ','
        << violation << '\n';
      text = s.str();
    } else {
      nlohmann::ordered_json j;
      j["case"] = to_string(params.id());
      j["verdict"] = verdict;
      j["violation"] = violation;
      j["params"] = {{"map", format_lft(params.map)},
                     {"conj", params.conj.to_string()},
                     {"weighted", params.weighted},
                     {"beta", format_complex(params.beta)}};
      text = j.dump(2) + "\n";
    }
    if (!emit(config, text, out)) throw BadInput("cannot write to " + config.out);
    return kOk;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kBadInput;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err, const PredicateFn& override_predicate) {
  CaseParams params{Lft::identity(), ConjugationSpec::jmu(1.0)};
  VerifyOptions options;
  try {
    if (config.format != "json" && config.format != "csv") throw BadInput("--format must be json or csv");
    if (!config.out.empty() && !output_path_writable(config.out)) {
      throw BadInput("cannot write to " + config.out);
    }
    params = parse_case(config);
    options = options_from(config);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    const VerificationReport report = verify(params, options, override_predicate);
    dump_matrices(params, options, err);
    const std::string text = config.format == "csv"
                                 ? "sample,case,verdict,kernel_residual,matrix_residual_max_n,consistent\n" +
                                       report.to_csv_row(0) + "\n"
                                 : report.to_json() + "\n";
    if (!emit(config, text, out)) {
      err << "error: cannot write to " << config.out << '\n';
      return kBadInput;
    }
    if (!report.consistent) {
      err << "inconsistent: predicate verdict contradicts the oracles\n";
      return kInconsistent;
    }
    return kOk;
  } catch (const IllConditionedGridError& e) {
    err << "error: " << e.what() << '\n';
    return kIllConditioned;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err, const PredicateFn& override_predicate) {
  SweepConfig sc;
  try {
    if (config.samples < 1) throw BadInput("--samples must be at least 1");
    const std::string format = config.format_given ? config.format : "csv";
    if (format != "json" && format != "csv") throw BadInput("--format must be json or csv");
    if (!config.out.empty() && !output_path_writable(config.out)) throw BadInput("cannot write to " + config.out);
    const std::string tag = lower_tag(config.conj);
    if (tag != "jmu" && tag != "jw") throw BadInput("--conj must name a family: jmu or jw");
    sc.case_id = config.weighted ? (tag == "jmu" ? CaseId::WeightedJmu : CaseId::WeightedJW)
                                 : (tag == "jmu" ? CaseId::CompJmu : CaseId::CompJW);
    const std::optional<SweepFamily> family = parse_sweep_family(config.map.empty() ? "random" : config.map);
    if (!family) throw BadInput("sweep --map must be random, hermitian or unitary");
    sc.family = *family;
    sc.samples = static_cast<std::size_t>(config.samples);
    sc.seed = config.seed;
    sc.verify = options_from(config);

    const SweepResult result = run_sweep(sc, override_predicate);
    std::ostringstream s;
    if (format == "csv") {
      write_sweep_csv(s, result);
    } else {
      write_sweep_json(s, result);
    }
    if (!emit(config, s.str(), out)) throw BadInput("cannot write to " + config.out);
    if (result.agreed() != result.rows.size()) {
      err << "agreement " << result.agreed() << '/' << result.rows.size() << '\n';
      return kInconsistent;
    }
    return kOk;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kBadInput;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Classify: return cmd_classify(config, out, err);
    case Command::Verify: return cmd_verify(config, out, err);
    case Command::Sweep: return cmd_sweep(config, out, err);
  }
  return kBadInput;
}

}  // namespace h2::cli
