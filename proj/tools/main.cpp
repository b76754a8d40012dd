#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace superlie::cli;
  CLI::App app{"Decide and construct Lie superalgebras of Riemannian type"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string in, out;
  std::vector<std::string> params;

  auto* validate = app.add_subcommand("validate", "check a problem file");
  validate->add_option("input", in, "problem JSON")->required();

  auto* test = app.add_subcommand("test", "decide super Lie type and write a report");
  test->add_option("input", in, "problem JSON")->required();
  test->add_option("--report", out, "report path")->required();

  auto* construct = app.add_subcommand("construct", "build and verify the superalgebra");
  construct->add_option("input", in, "problem JSON")->required();
  construct->add_option("--out", out, "output path")->required();

  std::string name;
  auto* catalog = app.add_subcommand("catalog", "export a catalog instance as a problem file");
  catalog->add_option("name", name, "instance, e.g. gl11, spin 3, double(gl11)")->required();
  catalog->add_option("params", params, "integer parameters");
  catalog->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailed;
  }

  if (*validate) return cmd_validate(in, std::cout, std::cerr);
  if (*test) return cmd_test(in, out, std::cout, std::cerr);
  if (*construct) return cmd_construct(in, out, std::cout, std::cerr);
  return cmd_catalog(name, params, out, std::cout, std::cerr);
}
