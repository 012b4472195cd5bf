#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace dforge::cli;

  CLI::App app{"Admissible divides, their open books and fiber monodromy", "divide_forge"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file;
  auto* validate = app.add_subcommand("validate", "Admissibility report (exit 1 if not)");
  validate->add_option("FILE", file, "Divide document")->required();

  auto* invariants = app.add_subcommand("invariants", "Page and Heegaard invariants");
  invariants->add_option("FILE", file, "Divide document")->required();

  auto* fiber = app.add_subcommand("fiber", "Fiber surface statistics and cycle counts");
  fiber->add_option("FILE", file, "Divide document")->required();

  bool homology = false;
  bool achiral = false;
  auto* monodromy = app.add_subcommand("monodromy", "Ordered Dehn twist word");
  monodromy->add_option("FILE", file, "Divide document")->required();
  monodromy->add_flag("--homology", homology, "Also print the action on H1 of the fiber");
  monodromy->add_flag("--achiral", achiral, "Use negative twists");

  EnumerateArgs en;
  int en_genus = 0;
  int en_max_v = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Genus-one divides, or the full census");
  auto* genus_opt = enumerate->add_option("--genus", en_genus, "Ambient genus");
  enumerate->add_flag("--all", en.all, "List every admissible divide up to --max-v");
  auto* max_v_opt = enumerate->add_option("--max-v", en_max_v, "Double point bound for --all");

  std::string kind;
  int fam_genus = 0;
  std::string output;
  auto* family = app.add_subcommand("family", "Emit a family divide as a document");
  family->add_option("--kind", kind, "birkhoff-fried, brunella or minimal")
      ->required()
      ->check(CLI::IsMember({"birkhoff-fried", "brunella", "minimal"}));
  family->add_option("--genus", fam_genus, "Ambient genus")->required();
  auto* family_out = family->add_option("-o,--output", output, "Output file");

  bool dot = false;
  bool svg = false;
  auto* render = app.add_subcommand("render", "Dual graph (DOT) or fiber schematic (SVG)");
  render->add_option("FILE", file, "Divide document")->required();
  render->add_flag("--dot", dot, "Dual graph in DOT");
  render->add_flag("--svg", svg, "Fiber schematic in SVG");
  auto* render_out = render->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Context ctx;
  ctx.format = format == "json" ? Format::Json : Format::Text;
  ctx.out = &std::cout;
  ctx.err = &std::cerr;

  auto maybe = [](CLI::Option* opt, const std::string& value) -> std::optional<std::string> {
    if (opt->count() == 0) return std::nullopt;
    return value;
  };

  if (validate->parsed()) return cmd_validate(ctx, file);
  if (invariants->parsed()) return cmd_invariants(ctx, file);
  if (fiber->parsed()) return cmd_fiber(ctx, file);
  if (monodromy->parsed()) return cmd_monodromy(ctx, file, homology, achiral);
  if (enumerate->parsed()) {
    if (genus_opt->count() > 0) en.genus = en_genus;
    if (max_v_opt->count() > 0) en.max_v = en_max_v;
    return cmd_enumerate(ctx, en);
  }
  if (family->parsed()) return cmd_family(ctx, kind, fam_genus, maybe(family_out, output));
  if (render->parsed()) return cmd_render(ctx, file, dot, svg, maybe(render_out, output));
  return kUsageError;
}
