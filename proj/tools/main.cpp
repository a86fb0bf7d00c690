#include <CLI11.hpp>

#include "adjrep/cli.hpp"

namespace {

void add_common(CLI::App* app, adjrep::cli::JobSpec& spec) {
  app->add_option("--input", spec.input, "input JSON file");
  app->add_option("--output", spec.output, "write the report here instead of stdout");
  app->add_option("--fixture", spec.fixture, "built-in fixture (heptagon-ex59, quadric-ex33, octa8-ex58, assoc-n6, ...)");
  app->add_flag("--approx", spec.approx, "add decimal renderings (non-authoritative)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint hypersurfaces and determinantal representations of polytopes"};
  app.require_subcommand(1);
  adjrep::cli::JobSpec spec;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub plain[] = {
      {"adjoint", "adjoint polynomial of a polytope"},
      {"residual", "residual arrangement and vanishing checks"},
      {"detrep2d", "symmetric tridiagonal representation of a polygon adjoint"},
      {"verify-detrep", "check det(M) = c * adjoint"},
      {"nice3d", "nice line arrangement search"},
      {"singularity", "triple points of residual lines"},
      {"sweep", "randomized residual-count and singularity sweep"},
      {"fixture", "list or print built-in fixtures"},
  };
  for (const auto& s : plain) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, spec);
    sub->add_option("--matrix", spec.matrix, "matrix JSON file, or 'builtin'");
    sub->add_option("--degree", spec.degree, "target degree D");
    sub->add_option("--seed", spec.seed, "RNG seed for randomized sweeps");
    sub->add_option("--count", spec.count, "number of random instances");
    sub->callback([&spec, name = std::string(s.name)] { spec.command = name; });
  }

  auto* assoc = app.add_subcommand("assoc", "ABHY associahedron universal adjoints");
  assoc->require_subcommand(1);
  const Sub assoc_subs[] = {
      {"adjoint", "universal adjoint Adj_{n-3}"},
      {"verify-av", "check an AV-representation"},
      {"obstruct", "obstruction certificate chain"},
  };
  for (const auto& s : assoc_subs) {
    auto* sub = assoc->add_subcommand(s.name, s.help);
    add_common(sub, spec);
    sub->add_option("--n", spec.n, "polygon size");
    sub->add_option("--matrix", spec.matrix, "matrix JSON with a \"primary\" list, or 'builtin'");
    sub->callback([&spec, name = std::string("assoc-") + s.name] { spec.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : adjrep::cli::kInputError;
  }
  return adjrep::cli::run_and_write(spec);
}
