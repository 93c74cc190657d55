#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgrep/commands.hpp"
#include "dgrep/error.hpp"
#include "dgrep/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact representation theory of finite digroups"};
  app.require_subcommand(1);

  std::string field_text;
  bool json = false, no_validate = false;
  app.add_option("--field", field_text, "rational or a prime p")->option_text("rational|p");
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--no-validate", no_validate, "skip axiom checks when loading files");

  std::string path, q_path, w_path, example_name, out_dir = ".";
  std::vector<std::string> paths;
  dgrep::GenerateSpec gen;

  auto* check = app.add_subcommand("check", "check digroup, representation or SES file axioms");
  check->add_option("file", path)->required();
  auto* ext1 = app.add_subcommand("ext1", "Ext^1(Q, W) by three independent methods");
  ext1->add_option("Q", q_path)->required();
  ext1->add_option("W", w_path)->required();
  auto* split = app.add_subcommand("split", "decide whether an SES file splits");
  split->add_option("ses", path)->required();
  auto* collapse = app.add_subcommand("collapse", "compare invariant B_E data with representation data");
  collapse->add_option("Q", q_path)->required();
  collapse->add_option("W", w_path)->required();
  auto* probe = app.add_subcommand("probe", "search for nonzero Ext^1 among representations");
  probe->add_option("files", paths)->required();
  auto* example = app.add_subcommand("example", "write a bundled example");
  example->add_option("name", example_name)->required();
  example->add_option("--out", out_dir, "output directory");
  auto* generate = app.add_subcommand("generate", "seeded random representations");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--group-order", gen.group_order)->capture_default_str();
  generate->add_option("--halo-size", gen.halo_size)->capture_default_str();
  generate->add_option("--dim", gen.dim)->capture_default_str();
  generate->add_option("--count", gen.count)->capture_default_str();
  generate->add_option("--out", gen.out_dir, "output directory (default: print one representation)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  dgrep::Options opt;
  opt.json = json;
  opt.validate = !no_validate;
  if (!field_text.empty()) {
    try {
      opt.field = dgrep::parse_field(field_text);
    } catch (const dgrep::Error& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return 2;
    }
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*check) return dgrep::cmd_check(path, opt, out, err);
  if (*ext1) return dgrep::cmd_ext1(q_path, w_path, opt, out, err);
  if (*split) return dgrep::cmd_split(path, opt, out, err);
  if (*collapse) return dgrep::cmd_collapse(q_path, w_path, opt, out, err);
  if (*probe) return dgrep::cmd_probe(paths, opt, out, err);
  if (*example) return dgrep::cmd_example(example_name, out_dir, opt, out, err);
  return dgrep::cmd_generate(gen, opt, out, err);
}
