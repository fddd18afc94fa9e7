#include <iostream>

#include <CLI11.hpp>

#include "cyclres/cli.hpp"

int main(int argc, char** argv) {
  using cyclres::CommandOptions;
  CLI::App app{"Resolutions of Stanley-Reisner rings of cyclic polytopes"};
  app.require_subcommand(1);
  CommandOptions o;

  auto add_dm = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "polytope dimension")->required();
    sub->add_option("--m", o.m, "number of vertices")->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", o.field, "q or prime:N"); };

  auto* faces = app.add_subcommand("faces", "face test or f-vector and facets");
  add_dm(faces);
  faces->add_option("--subset", o.subset, "comma-separated vertices, e.g. 1,3,5");
  add_format(faces, {"table", "json"});

  auto* complex = app.add_subcommand("complex", "summary of the simplicial complex");
  add_dm(complex);
  add_field(complex);
  add_format(complex, {"table", "json", "m2"});

  auto* ideal = app.add_subcommand("ideal", "generators of I, J, Q or P");
  add_dm(ideal);
  ideal->add_option("--which", o.which, "I, J, Q or P")->check(CLI::IsMember({"I", "J", "Q", "P"}));
  add_field(ideal);
  add_format(ideal, {"table", "json", "m2"});

  auto* resolve = app.add_subcommand("resolve", "build and verify the minimal resolution");
  add_dm(resolve);
  add_field(resolve);
  add_format(resolve, {"table", "json", "m2"});
  resolve->add_option("--checks", o.checks, "d2,minimal,betti,euler,rank,exact:<bound>");
  resolve->add_option("--out", o.out, "write the complex to this file");

  auto* betti = app.add_subcommand("betti", "graded Betti table");
  add_dm(betti);
  add_field(betti);
  add_format(betti, {"table", "json"});
  betti->add_option("--source", o.source, "formula, complex or both")
      ->check(CLI::IsMember({"formula", "complex", "both"}));

  auto* eta = app.add_subcommand("eta", "closed-form eta(d,m,i)");
  eta->add_option("--d", o.d)->required();
  eta->add_option("--m", o.m)->required();
  eta->add_option("--i", o.i)->required();
  add_format(eta, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto result = cyclres::run_command(app.get_subcommands().front()->get_name(), o);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
