// epiview: world views of epistemic logic programs and modal theories
// under G91, AEL, weak-autoepistemic, S5-equilibrium and FAEEL semantics,
// with foundedness certificates.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "epiview/epiview.hpp"

namespace {

using namespace epiview;

// Exit codes: 0 views exist / check passed / no violation; 1 usage or
// parse error; 2 enumeration cap exceeded; 3 no views / unfounded /
// violation found.
constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_cap = 2;
constexpr int exit_none = 3;

struct InputOptions {
  std::string path;
  std::string mode;  // "", "program", "theory"
  std::string atoms;
  int max_atoms = 0;  // 0: unset
};

struct LoadedInput {
  std::optional<Program> program;
  Theory theory;  // always set (rule formulas for programs)
  Signature* signature = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Signature hint_from_atoms(const std::string& atoms) {
  Signature sig;
  std::stringstream ss(atoms);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) sig.add(name);
  }
  return sig;
}

bool program_mode(const InputOptions& opts) {
  if (opts.mode == "program") return true;
  if (opts.mode == "theory") return false;
  std::string ext = std::filesystem::path(opts.path).extension().string();
  if (ext == ".lp") return true;
  if (ext == ".thy") return false;
  throw std::runtime_error("cannot infer input mode from '" + opts.path +
                           "'; use --mode program|theory");
}

LoadedInput load_input(const InputOptions& opts) {
  LoadedInput in;
  const std::string text = read_file(opts.path);
  const Signature hint = hint_from_atoms(opts.atoms);
  if (program_mode(opts)) {
    in.program = parse_program(text, &hint);
    in.theory = program_to_theory(*in.program);
  } else {
    in.theory = parse_theory(text, &hint);
  }
  in.signature = &in.theory.signature;

  int cap = opts.max_atoms;
  if (cap == 0) {
    if (const char* env = std::getenv("EPIVIEW_MAX_ATOMS")) cap = std::atoi(env);
  }
  if (cap != 0) {
    if (cap < in.signature->size())
      throw std::runtime_error("--max-atoms " + std::to_string(cap) +
                               " is below the signature size " +
                               std::to_string(in.signature->size()));
    in.signature->set_enumeration_cap(cap);
    if (in.program) in.program->signature.set_enumeration_cap(cap);
  }
  if (in.program) in.program->signature = *in.signature;
  return in;
}

int run_solve(const InputOptions& opts, const std::string& semantics,
              const std::string& format, bool explain, bool fast_path) {
  LoadedInput in = load_input(opts);
  std::optional<Semantics> tag = semantics_from_name(semantics);
  if (!tag) throw std::runtime_error("unknown semantics '" + semantics + "'");
  if (explain && !in.program)
    throw std::runtime_error("--explain needs a program input");

  const Signature& sig = *in.signature;
  std::vector<BeliefView> views;
  if (*tag == Semantics::faeel && in.program)
    views = faeel_world_views(*in.program, sig, fast_path);
  else
    views = solve(*tag, in.theory, sig);

  std::vector<FoundednessVerdict> verdicts;
  if (explain)
    for (const auto& w : views) verdicts.push_back(is_founded(*in.program, w));

  if (format == "json") {
    Json out;
    out["input"] = opts.path;
    out["semantics"] = semantics;
    out["world_views"] = views_to_json(views, sig);
    Json founded = Json::array();
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      founded.push_back(verdicts[i].founded);
      witnesses.push_back(verdicts[i].witness
                              ? witness_to_json(*verdicts[i].witness, sig)
                              : Json());
    }
    out["founded"] = explain ? founded : Json();
    out["witnesses"] = explain ? witnesses : Json();
    std::cout << out.dump(2) << "\n";
  } else {
    if (views.empty()) {
      std::cout << "no world views\n";
    } else {
      std::cout << views.size() << " world view"
                << (views.size() == 1 ? "" : "s") << ":\n";
      for (std::size_t i = 0; i < views.size(); ++i) {
        std::cout << print_view(views[i], sig);
        if (explain) {
          std::cout << (verdicts[i].founded ? "  founded" : "  unfounded ");
          if (verdicts[i].witness)
            std::cout << witness_to_json(*verdicts[i].witness, sig).dump();
        }
        std::cout << "\n";
      }
    }
  }
  return views.empty() ? exit_none : exit_ok;
}

int run_check_founded(const InputOptions& opts, const std::string& view_text,
                      const std::string& format) {
  LoadedInput in = load_input(opts);
  if (!in.program) throw std::runtime_error("check-founded needs a program input");
  BeliefView w = BeliefView::of(parse_view_argument(view_text, *in.signature));
  FoundednessVerdict verdict = is_founded(*in.program, w);
  if (format == "json") {
    Json out;
    out["input"] = opts.path;
    out["view"] = view_to_json(w, *in.signature);
    out["founded"] = verdict.founded;
    out["witness"] =
        verdict.witness ? witness_to_json(*verdict.witness, *in.signature) : Json();
    std::cout << out.dump(2) << "\n";
  } else if (verdict.founded) {
    std::cout << "founded\n";
  } else {
    std::cout << "unfounded "
              << witness_to_json(*verdict.witness, *in.signature).dump() << "\n";
  }
  return verdict.founded ? exit_ok : exit_none;
}

int run_compare(const InputOptions& opts, const std::string& format) {
  LoadedInput in = load_input(opts);
  const Signature& sig = *in.signature;
  DifferentialReport rep = in.program
                               ? differential_report(*in.program, sig)
                               : differential_report(in.theory, sig);
  if (format == "json") {
    Json out;
    out["input"] = opts.path;
    out["g91"] = views_to_json(rep.g91, sig);
    out["ael"] = views_to_json(rep.ael, sig);
    out["weak"] = views_to_json(rep.weak, sig);
    out["s5eq"] = views_to_json(rep.s5eq, sig);
    out["faeel"] = views_to_json(rep.faeel, sig);
    if (rep.faeel_fast)
      out["faeel_fast"] = views_to_json(*rep.faeel_fast, sig);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["ok"] = c.ok;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["all_ok"] = rep.all_ok();
    std::cout << out.dump(2) << "\n";
  } else {
    auto row = [&](const char* name, const std::vector<BeliefView>& views) {
      std::cout << name << ": " << print_views(views, sig) << "\n";
    };
    row("g91  ", rep.g91);
    row("ael  ", rep.ael);
    row("weak ", rep.weak);
    row("s5eq ", rep.s5eq);
    row("faeel", rep.faeel);
    if (rep.faeel_fast) row("faeel (founded-g91 path)", *rep.faeel_fast);
    for (const auto& c : rep.checks)
      std::cout << (c.ok ? "  ok   " : "  FAIL ") << c.name
                << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  return rep.all_ok() ? exit_ok : exit_none;
}

int run_corpus_cmd(const std::string& dir) {
  CorpusReport rep = run_corpus(dir);
  for (const auto& row : rep.rows) {
    std::cout << (row.ok ? "pass " : "FAIL ") << row.id << " [" << row.semantics
              << "]" << (row.detail.empty() ? "" : ": " + row.detail) << "\n";
  }
  std::cout << rep.rows.size() << " assertions, " << rep.failures
            << " failures\n";
  return rep.failures == 0 ? exit_ok : exit_none;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"world views of epistemic logic programs and modal theories"};
  app.require_subcommand(1);

  InputOptions in;
  std::string semantics = "faeel";
  std::string format = "text";
  bool explain = false;
  bool no_fast_path = false;
  std::string view_text;
  std::string corpus_dir;

  auto add_input_opts = [&](CLI::App* cmd) {
    cmd->add_option("path", in.path, "input file (.lp program, .thy theory)")
        ->required();
    cmd->add_option("--mode", in.mode, "input mode: program|theory")
        ->check(CLI::IsMember({"program", "theory"}));
    cmd->add_option("--atoms", in.atoms,
                    "comma-separated extra atoms for the signature");
    cmd->add_option("--max-atoms", in.max_atoms,
                    "override the enumeration cap (default 4; also "
                    "EPIVIEW_MAX_ATOMS)");
    cmd->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "compute world views under one semantics");
  add_input_opts(solve_cmd);
  solve_cmd->add_option("--semantics", semantics,
                        "g91|ael|weak|s5eq|faeel (default faeel)")
      ->check(CLI::IsMember({"g91", "ael", "weak", "s5eq", "faeel"}));
  solve_cmd->add_flag("--explain", explain,
                      "annotate each view founded/unfounded (programs)");
  solve_cmd->add_flag("--no-fast-path", no_fast_path,
                      "run the equilibrium fixpoint instead of the "
                      "founded-g91 route (programs, faeel)");

  CLI::App* check_cmd = app.add_subcommand(
      "check-founded", "certify foundedness of a world view for a program");
  add_input_opts(check_cmd);
  check_cmd->add_option("view", view_text, "world view, e.g. \"[{a},{b}]\"")
      ->required();

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "solve under every semantics and cross-check them");
  add_input_opts(compare_cmd);

  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "run the bundled golden corpus");
  corpus_cmd->add_option("dir", corpus_dir, "corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(in, semantics, format, explain, !no_fast_path);
    if (check_cmd->parsed()) return run_check_founded(in, view_text, format);
    if (compare_cmd->parsed()) return run_compare(in, format);
    if (corpus_cmd->parsed()) return run_corpus_cmd(corpus_dir);
  } catch (const epiview::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const epiview::ParseError& e) {
    std::cerr << in.path << ":" << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}
