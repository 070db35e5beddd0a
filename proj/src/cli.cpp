#include "gqs/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "gqs/alambda.hpp"
#include "gqs/classical_rep.hpp"
#include "gqs/classify.hpp"
#include "gqs/document.hpp"
#include "gqs/randgen.hpp"
#include "gqs/williamson.hpp"

namespace gqs::cli {
namespace {

using doc::Json;

struct Options {
  Tolerances tol;
  bool pretty = false;
  std::string input = "-";
};

struct Record {
  Json json;
  std::size_t index = 0;
  std::size_t line = 0;
};

// Reads either a single JSON array of documents or one document per line.
// Returns false after printing a position-bearing diagnostic.
bool read_records(const Options& opt, std::istream& in, std::ostream& err,
                  std::vector<Record>& records) {
  std::string text;
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << opt.input << "\n";
      return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return true;
  if (text[first] == '[') {
    try {
      const Json all = Json::parse(text);
      for (std::size_t i = 0; i < all.size(); ++i) records.push_back({all[i], i, 0});
      return true;
    } catch (const Json::parse_error& e) {
      err << "error: input array: parse error at byte " << e.byte << ": " << e.what() << "\n";
      return false;
    }
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back({Json::parse(line), records.size(), line_no});
    } catch (const Json::parse_error& e) {
      err << "error: record " << records.size() << " (line " << line_no
          << "): parse error at column " << e.byte << ": " << e.what() << "\n";
      return false;
    }
  }
  return true;
}

std::string where(const Record& r) {
  std::string s = "record " + std::to_string(r.index);
  if (r.line > 0) s += " (line " + std::to_string(r.line) + ")";
  return s;
}

Json envelope(const std::string& command, const Record& r,
              const std::optional<std::string>& label, const Options& opt) {
  Json j = {{"command", command},
            {"record", r.index},
            {"tool_version", doc::kToolVersion},
            {"tolerances", doc::to_json(opt.tol)}};
  j["label"] = label ? Json(*label) : Json(nullptr);
  return j;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string fmt(double x) {
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

std::string pretty_label(const Json& j) {
  return j["label"].is_string() ? j["label"].get<std::string>()
                                : "#" + std::to_string(j["record"].get<std::size_t>());
}

// Human-readable one-liner; never meant for pipelines.
std::string pretty_line(const Json& j) {
  std::ostringstream ss;
  ss << pretty_label(j) << ": ";
  if (j.contains("error")) {
    ss << "ERROR " << j["error"]["kind"].get<std::string>() << " - "
       << j["error"]["message"].get<std::string>();
    return ss.str();
  }
  const std::string cmd = j["command"];
  if (cmd == "classify") {
    const Json& f = j["flags"];
    ss << "GS=" << yes(f["gaussian"]) << " CGS=" << yes(f["classical"])
       << " PUN=" << yes(f["pun"]) << " CSGS=" << yes(f["csgs"])
       << " gauge=" << yes(f["gauge_invariant"]);
    if (j["residuals"].contains("commutator")) {
      ss << " |[S,J]|=" << fmt(j["residuals"]["commutator"].get<double>());
    }
  } else if (cmd == "validate") {
    ss << (j["valid"].get<bool>() ? "valid" : "INVALID")
       << " lambda_min=" << fmt(j["min_eig"].get<double>());
  } else if (cmd == "williamson") {
    ss << "d =";
    for (const auto& d : j["d"]) ss << " " << fmt(d.get<double>());
  } else if (cmd == "pfunction") {
    ss << j["class_tag"].get<std::string>() << " N =";
    for (const auto& n : j["N"]) ss << " " << fmt(n.get<double>());
  } else if (cmd == "genfun") {
    ss << "G = " << fmt(j["G"][0].get<double>()) << " + " << fmt(j["G"][1].get<double>())
       << "i";
  } else {
    ss << j.dump();
  }
  return ss.str();
}

void emit(const Json& j, const Options& opt, std::ostream& out) {
  if (opt.pretty) {
    out << pretty_line(j) << "\n";
  } else {
    out << j.dump() << "\n";
  }
}

using StateProcessor =
    std::function<Json(const doc::StateDocument&, const Record&, bool& failed)>;

// Shared driver for commands whose input is a stream of state documents.
int run_state_command(const std::string& command, const Options& opt, std::istream& in,
                      std::ostream& out, std::ostream& err, const StateProcessor& process) {
  std::vector<Record> records;
  if (!read_records(opt, in, err, records)) return kExitParseError;
  std::vector<doc::StateDocument> docs;
  for (const Record& r : records) {
    try {
      docs.push_back(doc::state_from_json(r.json, opt.tol));
    } catch (const doc::DocumentError& e) {
      err << "error: " << where(r) << ": field " << e.field() << ": " << e.what() << "\n";
      return kExitParseError;
    } catch (const Error& e) {
      err << "error: " << where(r) << ": " << e.what() << "\n";
      return kExitParseError;
    }
  }
  bool any_failed = false;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Json j = envelope(command, records[i], docs[i].label, opt);
    bool failed = false;
    try {
      j.update(process(docs[i], records[i], failed));
    } catch (const Error& e) {
      j["error"] = doc::error_to_json(e);
      failed = true;
    }
    any_failed = any_failed || failed;
    emit(j, opt, out);
  }
  return any_failed ? kExitInvalid : kExitOk;
}

void add_common(CLI::App* app, Options& opt, bool with_input) {
  app->add_option("--sym-tol", opt.tol.sym_tol, "symmetry tolerance");
  app->add_option("--psd-tol", opt.tol.psd_tol, "PSD tolerance");
  app->add_option("--commutator-tol", opt.tol.commutator_tol, "commutator tolerance");
  app->add_option("--residual-tol", opt.tol.residual_tol, "residual tolerance");
  app->add_flag("--pretty", opt.pretty, "human-readable summary instead of documents");
  if (with_input) app->add_option("input", opt.input, "input file, '-' for stdin");
}

Json cmd_validate(const doc::StateDocument& d, const Options& opt, bool& failed) {
  const ValidityReport v = validate(d.state, opt.tol);
  failed = !v.valid();
  Json sympl = Json::array();
  for (double x : v.sympl_eigs) sympl.push_back(doc::to_json(x));
  return {{"valid", v.valid()},
          {"symmetric", v.symmetric},
          {"uncertainty_ok", v.uncertainty_ok},
          {"min_eig", doc::to_json(v.min_eig)},
          {"sympl_eigs", sympl}};
}

Json cmd_classify(const doc::StateDocument& d, const Options& opt, bool& failed) {
  const ClassificationReport r = classify(d.state, opt.tol);
  failed = !r.is_gaussian;
  return doc::report_to_json(r);
}

Json cmd_williamson(const doc::StateDocument& d, const Options& opt, bool& failed) {
  require_valid(d.state, opt.tol);
  const WilliamsonDecomposition w = williamson_decompose(d.state.cov(), opt.tol);
  const int n = d.state.modes();
  const RealMatrix j = standard_symplectic_form(n);
  RealVector dd(2 * n);
  dd << w.d, w.d;
  const double sympl = (w.L.transpose() * j * w.L - j).norm();
  const double normal =
      (w.L.transpose() * d.state.cov() * w.L - RealMatrix(dd.asDiagonal())).norm();
  failed = false;
  return doc::williamson_to_json(w, sympl, normal, thermal_parameters(w.d, opt.tol));
}

Json cmd_to_alambda(const doc::StateDocument& d, const Options& opt, bool& failed) {
  const ALambdaParams p = from_covariance(d.state, opt.tol);
  const ParamReport pr = validate_params(p.A, p.Lambda, opt.tol);
  failed = false;
  Json j = doc::params_to_json(p);
  j["c"] = doc::to_json(c_normalization(p.A, p.Lambda));
  j["normA"] = doc::to_json(pr.normA);
  j["normLambda"] = doc::to_json(pr.normLambda);
  return j;
}

Json cmd_pfunction(const doc::StateDocument& d, const Options& opt, bool& failed) {
  const ClassicalNoise noise = classical_covariance(d.state, opt.tol);
  const PFunctionForm form = table_form(d.state, opt.tol);
  failed = false;
  return doc::pfunction_to_json(form, noise);
}

int cmd_from_alambda(const Options& opt, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  std::vector<Record> records;
  if (!read_records(opt, in, err, records)) return kExitParseError;
  std::vector<doc::ParamsDocument> docs;
  for (const Record& r : records) {
    try {
      docs.push_back(doc::params_from_json(r.json));
    } catch (const doc::DocumentError& e) {
      err << "error: " << where(r) << ": field " << e.field() << ": " << e.what() << "\n";
      return kExitParseError;
    }
  }
  bool any_failed = false;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    try {
      const GaussianState s = to_covariance(docs[i].params, opt.tol);
      const Json j = doc::state_to_json(s, docs[i].label);
      if (opt.pretty) {
        out << (docs[i].label ? *docs[i].label : "#" + std::to_string(i)) << ": " << j.dump()
            << "\n";
      } else {
        out << j.dump() << "\n";
      }
    } catch (const Error& e) {
      Json j = envelope("from-alambda", records[i], docs[i].label, opt);
      j["error"] = doc::error_to_json(e);
      emit(j, opt, out);
      any_failed = true;
    }
  }
  return any_failed ? kExitInvalid : kExitOk;
}

int cmd_genfun(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Record> records;
  if (!read_records(opt, in, err, records)) return kExitParseError;
  struct Input {
    std::variant<doc::StateDocument, doc::ParamsDocument> source;
    ComplexVector u, v;
    std::optional<std::string> label;
  };
  std::vector<Input> inputs;
  for (const Record& r : records) {
    try {
      Input input{doc::StateDocument{GaussianState::vacuum(1), {}}, {}, {}, {}};
      if (doc::looks_like_params(r.json)) {
        auto p = doc::params_from_json(r.json);
        input.label = p.label;
        input.source = std::move(p);
      } else {
        auto s = doc::state_from_json(r.json, opt.tol);
        input.label = s.label;
        input.source = std::move(s);
      }
      if (!r.json.contains("u")) throw doc::DocumentError("/u", "missing field");
      if (!r.json.contains("v")) throw doc::DocumentError("/v", "missing field");
      input.u = doc::complex_vector_from_json(r.json["u"], "/u");
      input.v = doc::complex_vector_from_json(r.json["v"], "/v");
      inputs.push_back(std::move(input));
    } catch (const doc::DocumentError& e) {
      err << "error: " << where(r) << ": field " << e.field() << ": " << e.what() << "\n";
      return kExitParseError;
    } catch (const Error& e) {
      err << "error: " << where(r) << ": " << e.what() << "\n";
      return kExitParseError;
    }
  }
  bool any_failed = false;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Json j = envelope("genfun", records[i], inputs[i].label, opt);
    try {
      const ALambdaParams p =
          std::holds_alternative<doc::ParamsDocument>(inputs[i].source)
              ? std::get<doc::ParamsDocument>(inputs[i].source).params
              : from_covariance(std::get<doc::StateDocument>(inputs[i].source).state, opt.tol);
      j["G"] = doc::to_json(generating_function(p, inputs[i].u, inputs[i].v, opt.tol));
      j["params"] = doc::params_to_json(p);
    } catch (const Error& e) {
      j["error"] = doc::error_to_json(e);
      any_failed = true;
    }
    emit(j, opt, out);
  }
  return any_failed ? kExitInvalid : kExitOk;
}

int cmd_random(const std::string& cls, int n, std::uint64_t seed, std::size_t count,
               const Options& opt, std::ostream& out, std::ostream& err) {
  const auto tag = parse_state_class(cls);
  if (!tag) {
    err << "error: unknown class '" << cls << "' (expected gs, cgs, pun, csgs or pure)\n";
    return kExitParseError;
  }
  if (n < 1) {
    err << "error: mode count must be >= 1\n";
    return kExitParseError;
  }
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec;
    spec.seed = seed + i;
    spec.n = n;
    spec.class_tag = *tag;
    const GaussianState s = random_state(spec);
    const std::string label =
        cls + "-n" + std::to_string(n) + "-seed" + std::to_string(seed + i);
    const Json j = doc::state_to_json(s, label);
    if (opt.pretty) {
      out << label << ": " << j["cov"].dump() << "\n";
    } else {
      out << j.dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gaussian state classification and parametrization tool", "gqs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", doc::kToolVersion);

  Options opt;
  struct StateCommand {
    const char* name;
    const char* help;
    Json (*fn)(const doc::StateDocument&, const Options&, bool&);
  };
  const StateCommand state_commands[] = {
      {"validate", "check the uncertainty relation", cmd_validate},
      {"classify", "classify states in the GS/CGS/PUN/CSGS lattice", cmd_classify},
      {"williamson", "Williamson normal form and thermal parameters", cmd_williamson},
      {"to-alambda", "convert states to (mu, A, Lambda)", cmd_to_alambda},
      {"pfunction", "Glauber-Sudarshan normal form of classical states", cmd_pfunction},
  };
  std::vector<std::pair<CLI::App*, const StateCommand*>> subs;
  for (const auto& c : state_commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, opt, true);
    subs.emplace_back(sub, &c);
  }
  CLI::App* from_alambda = app.add_subcommand("from-alambda", "convert (mu, A, Lambda) to states");
  add_common(from_alambda, opt, true);
  CLI::App* genfun = app.add_subcommand("genfun", "evaluate the generating function at (u, v)");
  add_common(genfun, opt, true);

  CLI::App* random = app.add_subcommand("random", "generate random states of a class");
  add_common(random, opt, false);
  std::string cls;
  int n = 1;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  random->add_option("class", cls, "gs, cgs, pun, csgs or pure")->required();
  random->add_option("n", n, "mode count")->required();
  random->add_option("seed,--seed", seed, "first seed");
  random->add_option("count,--count", count, "number of states");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    opt.tol.check();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  for (const auto& [sub, c] : subs) {
    if (sub->parsed()) {
      const auto fn = c->fn;
      return run_state_command(
          c->name, opt, in, out, err,
          [&](const doc::StateDocument& d, const Record&, bool& failed) {
            return fn(d, opt, failed);
          });
    }
  }
  if (from_alambda->parsed()) return cmd_from_alambda(opt, in, out, err);
  if (genfun->parsed()) return cmd_genfun(opt, in, out, err);
  if (random->parsed()) return cmd_random(cls, n, seed, count, opt, out, err);
  return kExitParseError;
}

}  // namespace gqs::cli
