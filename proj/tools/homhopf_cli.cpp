// homhopf: command-line front end for the structure-file commands.

#include "homhopf/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact checks, integrals and splittings for monoidal Hom-Hopf structures"};
  app.require_subcommand(1);

  std::string field_text;
  homhopf::CommandOptions opt;
  app.add_option("--field", field_text, "Ground field: Q or GF(p)");
  app.add_option("--out", opt.out, "Write the resulting structure file here");
  app.add_flag("--verbose", opt.verbose, "Print every residual");
  app.add_option("--max-twist-power", opt.max_twist_power, "Twist-power window for split")
      ->check(CLI::NonNegativeNumber);

  std::string file, object, datum, hopf, automorphism, f, g, integral, name;
  std::vector<std::string> modules;

  auto* check = app.add_subcommand("check", "Run the axiom checks for an object (or all objects)");
  check->add_option("file", file)->required();
  check->add_option("object", object);

  auto* find = app.add_subcommand("find-integral", "Solve for a normalized integral of a datum");
  find->add_option("file", file)->required();
  find->add_option("datum", datum)->required();

  auto* certify = app.add_subcommand("certify", "Write a separability certificate for a datum");
  certify->add_option("file", file)->required();
  certify->add_option("datum", datum)->required();
  certify->add_option("modules", modules);

  auto* split = app.add_subcommand("split", "Split a Doi morphism f using a linear splitting g");
  split->add_option("file", file)->required();
  split->add_option("datum", datum)->required();
  split->add_option("f", f)->required();
  split->add_option("g", g)->required();
  split->add_option("--integral", integral, "Use this integral object instead of solving");

  auto* twist = app.add_subcommand("twist", "Yau-twist a Hopf algebra by an automorphism");
  twist->add_option("file", file)->required();
  twist->add_option("hopf", hopf)->required();
  twist->add_option("automorphism", automorphism)->required();

  auto* examples = app.add_subcommand("examples", "Emit a built-in structure file (\"list\" for names)");
  examples->add_option("name", name)->required();

  for (auto* sub : {check, find, certify, split, twist, examples}) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (!field_text.empty()) opt.field = homhopf::Field::parse(field_text);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return homhopf::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homhopf::kExitUsage;
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (check->parsed()) return homhopf::cmd_check(file, object, opt, out, err);
  if (find->parsed()) return homhopf::cmd_find_integral(file, datum, opt, out, err);
  if (certify->parsed()) return homhopf::cmd_certify(file, datum, modules, opt, out, err);
  if (split->parsed()) return homhopf::cmd_split(file, datum, f, g, integral, opt, out, err);
  if (twist->parsed()) return homhopf::cmd_twist(file, hopf, automorphism, opt, out, err);
  return homhopf::cmd_examples(name, opt, out, err);
}
