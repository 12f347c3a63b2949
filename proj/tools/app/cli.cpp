#include "app/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "app/commands.hpp"
#include "app/format.hpp"
#include "app/service.hpp"
#include "ndagg/error.hpp"
#include "ndagg/mcgdm.hpp"

namespace ndagg::app {

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};


std::string readFile(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw IoError("cannot open '" + path + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json readJson(const std::string& path) {
  const std::string text = readFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), path);
  }
}

AdmissibleOrderSpec readOrder(const std::string& path) {
  const json j = readJson(path);
  try {
    return AdmissibleOrderSpec::fromJson(j.contains("order") ? j.at("order") : j);
  } catch (const ValidationError& e) {
    throw e.within(path);
  }
}

DecisionProblem readProblem(const std::string& path, bool require_method) {
  const json j = readJson(path);
  try {
    return DecisionProblem::fromJson(j, require_method);
  } catch (const ValidationError& e) {
    throw ValidationError(e.message(), e.path().empty() ? path : path + ": " + e.path());
  }
}

}  // namespace

int runCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"n-dimensional interval aggregation and group decision making"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  std::uint64_t seed = defaultSeed();
  std::size_t samples = 1000;
  auto common = [&](CLI::App* sub, bool sampling) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("-o,--output", output, "Write the report to this file");
    if (sampling) {
      sub->add_option("--seed", seed, "Sampling seed (NDAGG_SEED overrides the default)");
      sub->add_option("--samples", samples, "Random samples per property");
    }
  };

  std::string problem_path, order_path, agg_path, data_dir = "ndagg-problems", host = "127.0.0.1",
                                                  cors;
  std::vector<std::string> csv_paths, edits;
  std::optional<std::size_t> arity;
  std::size_t dimension = 4;
  int port = defaultPort();

  auto* rank = app.add_subcommand("rank", "Score and rank the alternatives of a problem");
  rank->add_option("--problem", problem_path, "Problem JSON")->required();
  common(rank, true);

  auto* score = app.add_subcommand("score", "Print the L_n-scores of a problem");
  score->add_option("--problem", problem_path, "Problem JSON")->required();
  common(score, true);

  auto* collective = app.add_subcommand("collective", "Build the collective matrix");
  auto* coll_problem = collective->add_option("--problem", problem_path, "Problem JSON");
  collective->add_option("--csv", csv_paths, "Per-expert CSV sheets, in expert order")
      ->excludes(coll_problem);
  common(collective, false);

  auto* check_order = app.add_subcommand("check-order", "Admissibility and SV8/SV9 for an order");
  check_order->add_option("--order", order_path, "Order spec JSON")->required();
  common(check_order, true);

  auto* check_axioms = app.add_subcommand("check-axioms", "Weak-semifield and semi-vector-space axioms");
  check_axioms->add_option("--dimension", dimension, "Dimension n of L_n")->check(CLI::Range(1, 64));
  check_axioms->add_option("--order", order_path, "Order for SV8/SV9 (default LexTau identity)");
  common(check_axioms, true);

  auto* classify = app.add_subcommand("classify", "Classify an n-dimensional aggregation");
  classify->add_option("--agg", agg_path, "Aggregator descriptor JSON")->required();
  classify->add_option("--order", order_path, "Order spec JSON")->required();
  classify->add_option("--arity", arity, "Number of arguments m");
  common(classify, true);

  auto* sens = app.add_subcommand("sensitivity", "Re-rank after edits and report the differences");
  sens->add_option("--problem", problem_path, "Problem JSON")->required();
  sens->add_option("--edit", edits, "Edit such as expert=2,alt=4,crit=3,value=0.1")->required();
  common(sens, true);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (NDAGG_PORT overrides the default 8080)");
  serve->add_option("--data-dir", data_dir, "Directory for stored problems");
  serve->add_option("--cors-origin", cors, "Allowed cross-origin client");
  serve->add_option("--seed", seed, "Sampling seed for construction gates");

  auto* validate = app.add_subcommand("validate", "Check a problem file against its invariants");
  validate->add_option("--problem", problem_path, "Problem JSON")->required();
  common(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const SamplingConfig cfg{seed, samples};
  auto emit = [&](const json& doc, const std::string& table) {
    const std::string text = format == "table" ? table : doc.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream f(output, std::ios::binary | std::ios::trunc);
      if (!f) throw IoError("cannot write '" + output + "'");
      f << text;
    }
  };

  try {
    if (rank->parsed()) {
      const json doc = rankDocument(readProblem(problem_path, true), cfg);
      emit(doc, rankTable(doc));
    } else if (score->parsed()) {
      const json doc = scoreDocument(readProblem(problem_path, true), cfg);
      std::vector<std::vector<std::string>> rows{{"alternative", "score"}};
      for (std::size_t i = 0; i < doc.at("alternatives").size(); ++i) {
        rows.push_back({doc.at("alternatives")[i].get<std::string>(),
                        formatTuple(doc.at("scores")[i].get<std::vector<double>>())});
      }
      emit(doc, renderTable(rows));
    } else if (collective->parsed()) {
      DecisionProblem problem;
      if (!csv_paths.empty()) {
        std::vector<ExpertSheet> sheets;
        std::vector<std::string> labels;
        for (const auto& path : csv_paths) {
          try {
            sheets.push_back(parseExpertCsv(readFile(path)));
          } catch (const ValidationError& e) {
            throw e.within(path);
          }
          labels.push_back(std::filesystem::path(path).stem().string());
        }
        problem = assembleFromSheets(labels, sheets);
      } else if (!problem_path.empty()) {
        problem = readProblem(problem_path, false);
      } else {
        throw ValidationError("pass --problem or --csv");
      }
      const json doc = collectiveDocument(problem);
      emit(doc, collectiveTable(doc));
    } else if (check_order->parsed()) {
      const json doc = checkOrderDocument(readOrder(order_path), cfg);
      emit(doc, reportsTable(doc));
      if (!doc.at("holds").get<bool>()) return kViolation;
    } else if (check_axioms->parsed()) {
      const AdmissibleOrderSpec spec = order_path.empty()
                                           ? AdmissibleOrderSpec::lexTau(Permutation::identity(dimension))
                                           : readOrder(order_path);
      const json doc = checkAxiomsDocument(spec.dimension(), spec, cfg);
      emit(doc, reportsTable(doc));
      if (!doc.at("holds").get<bool>()) return kViolation;
    } else if (classify->parsed()) {
      const json doc = classifyDocument(readJson(agg_path), readOrder(order_path), arity, cfg);
      std::string table = reportsTable(doc);
      for (const auto& w : doc.at("warnings")) table += "warning: " + w.get<std::string>() + "\n";
      emit(doc, table);
    } else if (sens->parsed()) {
      std::vector<Edit> parsed;
      for (std::size_t i = 0; i < edits.size(); ++i) {
        try {
          parsed.push_back(parseEdit(edits[i]));
        } catch (const ValidationError& e) {
          throw ValidationError(e.message(), "--edit #" + std::to_string(i + 1));
        }
      }
      const json doc = sensitivityDocument(readProblem(problem_path, true), parsed, cfg);
      std::vector<std::vector<std::string>> rows{{"cell", "before", "after"}};
      for (const auto& c : doc.at("collectiveChanges")) {
        rows.push_back({c.at("alternative").get<std::string>() + "/" + c.at("criterion").get<std::string>(),
                        formatTuple(c.at("before").get<std::vector<double>>()),
                        formatTuple(c.at("after").get<std::vector<double>>())});
      }
      std::string table = renderTable(rows);
      table += "\nbaseline: " + doc.at("baseline").at("ranking").at("text").get<std::string>() + "\n";
      table += "edited:   " + doc.at("edited").at("ranking").at("text").get<std::string>() + "\n";
      for (const auto& f : doc.at("flips")) {
        table += "flip: " + f.at("a").get<std::string>() + " " + f.at("before").get<std::string>() +
                 " " + f.at("b").get<std::string>() + " became " + f.at("a").get<std::string>() + " " +
                 f.at("after").get<std::string>() + " " + f.at("b").get<std::string>() + "\n";
      }
      emit(doc, table);
    } else if (validate->parsed()) {
      const DecisionProblem p = readProblem(problem_path, false);
      const json doc{{"valid", true},
                     {"alternatives", p.p()},
                     {"criteria", p.m()},
                     {"experts", p.n()}};
      emit(doc, "valid: " + std::to_string(p.p()) + " alternatives, " + std::to_string(p.m()) +
                    " criteria, " + std::to_string(p.n()) + " experts\n");
    } else if (serve->parsed()) {
      Service service(ServiceConfig{data_dir, cors, SamplingConfig{seed, 1000}});
      const int bound = service.bind(host, port);
      if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
      err << "listening on http://" << host << ":" << bound << "\n";
      return service.serve() ? kOk : kIoError;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ValidationError& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const ContractViolation& e) {
    err << "contract violation (" << e.axiom() << "): " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace ndagg::app
