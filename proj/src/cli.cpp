#include "prosody/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "prosody/annotate.hpp"
#include "prosody/config.hpp"
#include "prosody/error.hpp"
#include "prosody/experiment.hpp"
#include "prosody/f0.hpp"
#include "prosody/spmh.hpp"
#include "prosody/tree.hpp"
#include "prosody/wellformedness.hpp"

namespace prosody::cli {

namespace {

// A parsed input: either syntactic trees or (for check) proposed-format clauses.
struct Input {
  std::string path;
  std::vector<tree::SyntacticTree> trees;
  std::vector<spmh::ProsodicTree> prosodic;
};

class Failure : public std::runtime_error {
public:
  Failure(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError: return kIo;
    default: return kParse;
  }
}

std::string describe(const std::string& path, const Error& e) {
  std::string where = path;
  if (e.where().line) where += ":" + std::to_string(e.where().line) + ":" + std::to_string(e.where().column);
  return where + ": " + e.what();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kIo, path + ": IoError: cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_proposed(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// One proposed-format clause per non-blank line.
std::vector<spmh::ProsodicTree> parse_proposed_lines(const std::string& path, const std::string& text) {
  std::vector<spmh::ProsodicTree> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(annotate::parse_proposed(line));
    } catch (const Error& e) {
      throw Failure(exit_code_for(e.kind()),
                    path + ":" + std::to_string(number) + ":" + std::to_string(e.where().column) + ": " + e.what());
    }
  }
  return out;
}

Input load_input(const std::string& path, bool allow_proposed) {
  Input input{path, {}, {}};
  std::string text = read_file(path);
  if (allow_proposed && looks_proposed(text)) {
    input.prosodic = parse_proposed_lines(path, text);
    return input;
  }
  try {
    input.trees = tree::parse_trees(text);
  } catch (const Error& e) {
    throw Failure(exit_code_for(e.kind()), describe(path, e));
  }
  return input;
}

config::RunConfig load_run_config(const std::string& params_path, bool no_boost) {
  config::RunConfig cfg;
  if (!params_path.empty()) {
    try {
      cfg = config::load_config(params_path);
    } catch (const Error& e) {
      throw Failure(exit_code_for(e.kind()), params_path + ": " + e.what());
    }
  }
  if (no_boost) cfg.constraints.enable_boost_rephrasing = false;
  return cfg;
}

spmh::ProsodicTree prosodic_tree(const tree::SyntacticTree& t, const config::RunConfig& cfg) {
  return wellformedness::apply_all(spmh::project(t), cfg.constraints);
}

std::string annotate_file(const std::string& path, annotate::Format format, const config::RunConfig& cfg) {
  Input input = load_input(path, false);
  std::string out;
  for (std::size_t i = 0; i < input.trees.size(); ++i) {
    const auto& t = input.trees[i];
    try {
      switch (format) {
        case annotate::Format::baseline1: out += annotate::emit_baseline1(tree::yield_pwords(t)).text; break;
        case annotate::Format::baseline2: out += annotate::emit_baseline2(t).text; break;
        case annotate::Format::proposed: out += annotate::emit_proposed(prosodic_tree(t, cfg)).text; break;
      }
    } catch (const Error& e) {
      throw Failure(exit_code_for(e.kind()), path + ": sentence " + std::to_string(i + 1) + ": " + e.what());
    }
    out += '\n';
  }
  return out;
}

int cmd_annotate(const std::vector<std::string>& inputs, const std::string& format_name, bool no_boost,
                 std::ostream& out) {
  auto format = annotate::format_from_string(format_name);
  if (!format) throw Failure(kUsage, "unknown format '" + format_name + "'");
  auto cfg = load_run_config("", no_boost);
  // Files are independent; render concurrently and print in argument order.
  std::vector<std::future<std::string>> jobs;
  for (const auto& path : inputs) {
    jobs.push_back(std::async(std::launch::async, annotate_file, path, *format, cfg));
  }
  std::vector<std::string> results;
  for (auto& job : jobs) results.push_back(job.get());
  for (const auto& r : results) out << r;
  return kOk;
}

int cmd_contour(const std::string& input_path, const std::string& params_path, bool no_boost,
                const std::string& out_path, std::size_t sentence, std::ostream& out) {
  auto cfg = load_run_config(params_path, no_boost);
  Input input = load_input(input_path, false);
  if (sentence < 1 || sentence > input.trees.size()) {
    throw Failure(kUsage, "--sentence " + std::to_string(sentence) + " out of range (file has " +
                              std::to_string(input.trees.size()) + ")");
  }
  f0::Contour contour;
  try {
    contour = f0::synthesize(prosodic_tree(input.trees[sentence - 1], cfg), cfg.f0);
  } catch (const Error& e) {
    throw Failure(exit_code_for(e.kind()), input_path + ": " + e.what());
  }
  bool csv = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv";
  std::string doc = csv ? f0::to_csv(contour) : f0::to_json(contour);
  if (out_path.empty() || out_path == "-") {
    out << doc;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Failure(kIo, out_path + ": IoError: cannot write file");
  file << doc;
  if (!file) throw Failure(kIo, out_path + ": IoError: write failed");
  return kOk;
}

int cmd_experiment(const std::string& params_path, bool no_boost, bool json, std::ostream& out) {
  auto cfg = load_run_config(params_path, no_boost);
  experiment::Report report;
  try {
    report = experiment::run(cfg);
  } catch (const Error& e) {
    throw Failure(exit_code_for(e.kind()), std::string("experiment: ") + e.what());
  }
  out << (json ? experiment::to_json(report) : experiment::format_table(report));
  return report.all_yes() ? kOk : kPatternFailure;
}

std::string violation_summary(const std::vector<wellformedness::Violation>& violations) {
  if (violations.empty()) return "ok";
  std::string out = "violation (";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out += ", ";
    out += "phrase " + std::to_string(violations[i].phrase_index + 1) + " " +
           std::string(wellformedness::to_string(violations[i].constraint));
  }
  return out + ")";
}

int cmd_check(const std::string& input_path, bool no_boost, std::ostream& out) {
  auto cfg = load_run_config("", no_boost);
  Input input = load_input(input_path, true);
  std::vector<spmh::ProsodicTree> before = input.prosodic;
  try {
    for (const auto& t : input.trees) before.push_back(spmh::project(t));
  } catch (const Error& e) {
    throw Failure(exit_code_for(e.kind()), input_path + ": " + e.what());
  }
  bool all_ok = true;
  for (std::size_t i = 0; i < before.size(); ++i) {
    auto after = wellformedness::apply_all(before[i], cfg.constraints);
    auto post = wellformedness::find_violations(after);
    all_ok = all_ok && post.empty();
    out << "sentence " << i + 1 << ": " << annotate::emit_proposed(before[i]).text << "\n";
    out << "  before: " << violation_summary(wellformedness::find_violations(before[i])) << "\n";
    out << "  after: " << violation_summary(post) << "\n";
    out << "  result: " << annotate::emit_proposed(after).text << "\n";
  }
  return all_ok ? kOk : kPatternFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prosodyc: syntax-to-prosody compiler for Tokyo Japanese"};
  app.name("prosodyc");
  app.require_subcommand(1);

  std::vector<std::string> annotate_inputs;
  std::string format = "proposed";
  bool annotate_no_boost = false;
  auto* annotate_cmd = app.add_subcommand("annotate", "Emit TTS input annotations, one line per sentence");
  annotate_cmd->add_option("inputs", annotate_inputs, "Tree files")->required();
  annotate_cmd->add_option("--format", format, "baseline1 | baseline2 | proposed")
      ->check(CLI::IsMember({"baseline1", "baseline2", "proposed"}));
  annotate_cmd->add_flag("--no-boost", annotate_no_boost, "Disable rhythmic-boost re-phrasing");

  std::string contour_input;
  std::string contour_params;
  std::string contour_out;
  bool contour_no_boost = false;
  std::size_t contour_sentence = 1;
  auto* contour_cmd = app.add_subcommand("contour", "Render an F0 contour (JSON or CSV)");
  contour_cmd->add_option("input", contour_input, "Tree file")->required();
  contour_cmd->add_option("--params", contour_params, "JSON file overriding F0 and constraint parameters");
  contour_cmd->add_option("--out", contour_out, "Output file; .csv selects CSV, anything else JSON (default stdout)");
  contour_cmd->add_option("--sentence", contour_sentence, "1-based sentence index within the file");
  contour_cmd->add_flag("--no-boost", contour_no_boost, "Disable rhythmic-boost re-phrasing");

  std::string experiment_params;
  bool experiment_no_boost = false;
  bool experiment_json = false;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run the initial-lowering and rhythmic-boost items");
  experiment_cmd->add_option("--params", experiment_params, "JSON parameter file");
  experiment_cmd->add_flag("--no-boost", experiment_no_boost, "Disable rhythmic-boost re-phrasing");
  experiment_cmd->add_flag("--json", experiment_json, "Print the report as JSON");

  std::string check_input;
  bool check_no_boost = false;
  auto* check_cmd = app.add_subcommand("check", "Report constraint status before and after re-phrasing");
  check_cmd->add_option("input", check_input, "Tree file or proposed-format file")->required();
  check_cmd->add_flag("--no-boost", check_no_boost, "Disable rhythmic-boost re-phrasing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "prosodyc: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*annotate_cmd) return cmd_annotate(annotate_inputs, format, annotate_no_boost, out);
    if (*contour_cmd) {
      return cmd_contour(contour_input, contour_params, contour_no_boost, contour_out, contour_sentence, out);
    }
    if (*experiment_cmd) return cmd_experiment(experiment_params, experiment_no_boost, experiment_json, out);
    if (*check_cmd) return cmd_check(check_input, check_no_boost, out);
  } catch (const Failure& f) {
    err << "prosodyc: " << f.what() << "\n";
    return f.code();
  } catch (const Error& e) {
    err << "prosodyc: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace prosody::cli
