// dsdiag: evidential diagnosis from the command line.
//
//   dsdiag diagnose --condition 1 --symptoms fever,red-urine --trace
//   dsdiag consult --condition 1 < symptoms.txt
//   dsdiag validate --kb kb/trypanosomiasis.kb
//   dsdiag serve --addr 127.0.0.1:8080

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "evidence/service/commands.hpp"

namespace {

using evidence::service::Format;

const std::map<std::string, Format> kFormats = {
    {"table", Format::Table}, {"tsv", Format::Tsv}, {"json", Format::Json}};

}  // namespace

int main(int argc, char** argv) {
  namespace svc = evidence::service;

  CLI::App app{"Dempster-Shafer symptom evidence diagnosis"};
  app.require_subcommand(1);

  svc::DiagnoseOptions diag;
  std::string kb_path;
  std::vector<std::string> symptom_list;
  std::vector<std::string> symptom_each;
  auto* diagnose = app.add_subcommand("diagnose", "Fold the selected symptoms and rank diseases");
  diagnose->add_option("--kb", kb_path, "Knowledge base file (default: built-in table)");
  diagnose->add_option("--condition", diag.condition, "Condition profile name")->required();
  diagnose->add_option("--symptom", symptom_each, "Symptom name (repeatable)");
  diagnose->add_option("--symptoms", symptom_list, "Comma-separated symptom names")->delimiter(',');
  diagnose->add_flag("--trace", diag.trace, "Show every combination step");
  diagnose->add_option("--format", diag.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("table|tsv|json (default: table)");

  svc::ConsultOptions consult;
  auto* consult_cmd = app.add_subcommand("consult", "Interactive consultation on stdin");
  consult_cmd->add_option("--kb", kb_path, "Knowledge base file (default: built-in table)");
  consult_cmd->add_option("--condition", consult.condition, "Condition profile name")->required();
  consult_cmd->add_option("--format", consult.format, "Final summary format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("table|tsv|json (default: table)");

  svc::ValidateOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a knowledge base file");
  validate_cmd->add_option("--kb", validate.kb_path, "Knowledge base file")->required();

  svc::ServeOptions serve;
  std::string ui_dir;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP API and UI bundle");
  serve_cmd->add_option("--kb", kb_path, "Knowledge base file (default: built-in table)");
  serve_cmd->add_option("--addr", serve.addr, "host:port")->default_str("127.0.0.1:8080");
  serve_cmd->add_option("--ui", ui_dir, "Directory with the static UI bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return svc::kExitInputError;
  }

  std::optional<std::string> kb;
  if (!kb_path.empty()) kb = kb_path;

  if (*diagnose) {
    diag.kb_path = kb;
    diag.symptoms = symptom_each;
    diag.symptoms.insert(diag.symptoms.end(), symptom_list.begin(), symptom_list.end());
    return svc::cmd_diagnose(diag, std::cout, std::cerr);
  }
  if (*consult_cmd) {
    consult.kb_path = kb;
    return svc::cmd_consult(consult, std::cin, std::cout, std::cerr);
  }
  if (*validate_cmd) return svc::cmd_validate(validate, std::cout, std::cerr);

  serve.kb_path = kb;
  if (!ui_dir.empty()) serve.ui_dir = ui_dir;
  return svc::cmd_serve(serve, std::cout, std::cerr);
}
