// squig: command-line front end for the squigonometric engine.

#include "commands.hpp"

#include "CLI11.hpp"

#include <clocale>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct ParamFlags {
  int p = 4;
  int m = 1;
  int n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "exponent p >= 2")->capture_default_str();
    cmd->add_option("--m", m, "power of cq")->capture_default_str();
    cmd->add_option("--n", n, "power of sq")->capture_default_str();
  }
  squig::SquigParams params() const { return {p, m, n}; }
};

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  namespace cli = squig::cli;

  CLI::App app{"squig: squigonometric functions, coefficient triangles and constants"};
  app.require_subcommand(1);
  double eps = squig::default_epsilon;
  app.add_option("--eps", eps, "target tolerance (default 2^-53)");

  auto* table1 = app.add_subcommand("table1", "MacLaurin coefficients of cq and sq for p=4");

  auto* pi = app.add_subcommand("pi", "pi_p by Newton's method");
  std::string p_range = "3:10";
  pi->add_option("--p-range", p_range, "inclusive range a:b")->capture_default_str();

  auto* beta = app.add_subcommand("beta", "B((m+1)/p, (n+1)/p) with a quadrature cross-check");
  ParamFlags beta_flags{4, 0, 0};
  beta_flags.attach(beta);

  auto* eval = app.add_subcommand("eval", "evaluate sq, cq, tq or cq^m sq^n");
  ParamFlags eval_flags{4, 0, 0};
  eval_flags.attach(eval);
  std::string func = "sq";
  eval->add_option("--func", func, "sq, cq, tq or pow")->capture_default_str();
  std::optional<double> eval_t;
  std::optional<std::string> eval_grid;
  auto* t_opt = eval->add_option("--t", eval_t, "single abscissa");
  auto* grid_opt = eval->add_option("--grid", eval_grid, "start:stop:step");
  t_opt->excludes(grid_opt);

  auto* plot = app.add_subcommand("plotdata", "t,sq,cq samples");
  int plot_p = 4;
  std::optional<std::string> plot_grid;
  plot->add_option("--p", plot_p, "exponent p >= 2")->capture_default_str();
  plot->add_option("--grid", plot_grid, "start:stop:step (default 0:2pi_p:0.01)");

  auto* tri = app.add_subcommand("triangle", "coefficient triangle as JSON or CSV");
  ParamFlags tri_flags;
  tri_flags.attach(tri);
  int tri_K = 6;
  bool tri_csv = false;
  tri->add_option("--K", tri_K, "highest row")->capture_default_str();
  tri->add_flag("--csv", tri_csv, "k,j,value rows instead of JSON");

  auto* roots = app.add_subcommand("roots", "roots of the derivative polynomials");
  ParamFlags roots_flags;
  roots_flags.attach(roots);
  int roots_K = 10;
  roots->add_option("--K", roots_K, "highest order")->capture_default_str();

  auto* factors = app.add_subcommand("factors", "factor sequence a_j");
  ParamFlags factor_flags;
  factor_flags.attach(factors);
  int factor_J = 20;
  factors->add_option("--J", factor_J, "last index")->capture_default_str();

  auto* mac = app.add_subcommand("maclaurin", "MacLaurin coefficients");
  ParamFlags mac_flags;
  mac_flags.attach(mac);
  std::optional<int> mac_J;
  bool mac_json = false;
  mac->add_option("--J", mac_J, "last index (default from the term estimate)");
  mac->add_flag("--json", mac_json, "JSON with exact numerators");

  auto* verify = app.add_subcommand("verify", "run every oracle cross-check");

  auto* cache = app.add_subcommand("cache", "coefficient cache");
  cache->require_subcommand(1);
  std::optional<std::string> cache_file;
  cache->add_option("--file", cache_file, "cache path (default $SQUIG_CACHE_DIR/squig_cache.json)");
  auto* cache_save = cache->add_subcommand("save", "build and write tables");
  std::string cache_range = "3:10";
  cache_save->add_option("--p-range", cache_range, "inclusive range a:b")->capture_default_str();
  auto* cache_load = cache->add_subcommand("load", "read tables and check them against a rebuild");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::exit_ok : cli::exit_invalid;
  }

  std::ostream& out = std::cout;
  out.imbue(std::locale::classic());
  try {
    if (*table1) return cli::table1(out);
    if (*pi) return cli::pi(out, cli::parse_range(p_range), eps);
    if (*beta) return cli::beta(out, beta_flags.p, beta_flags.m, beta_flags.n, eps);
    if (*eval) {
      std::vector<double> ts;
      if (eval_t) {
        ts.push_back(*eval_t);
      } else if (eval_grid) {
        ts = cli::parse_grid(*eval_grid);
      } else {
        throw std::invalid_argument("eval: give --t or --grid");
      }
      return cli::eval(out, eval_flags.p, func, eval_flags.m, eval_flags.n, ts, eps);
    }
    if (*plot) return cli::plotdata(out, plot_p, plot_grid, eps);
    if (*tri) return cli::triangle(out, tri_flags.params(), tri_K, tri_csv);
    if (*roots) return cli::roots(out, roots_flags.params(), roots_K);
    if (*factors) return cli::factors(out, factor_flags.params(), factor_J, eps);
    if (*mac) return cli::maclaurin_cmd(out, mac_flags.params(), mac_J, mac_json, eps);
    if (*verify) return cli::verify(out);
    if (*cache) {
      const std::filesystem::path path = cache_file ? std::filesystem::path(*cache_file) : squig::default_cache_path();
      if (*cache_save) return cli::cache_save(out, cli::parse_range(cache_range), eps, path);
      if (*cache_load) return cli::cache_load(out, path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "squig: " << e.what() << '\n';
    return cli::exit_invalid;
  } catch (const std::domain_error& e) {
    std::cerr << "squig: " << e.what() << '\n';
    return cli::exit_invalid;
  } catch (const std::length_error& e) {
    std::cerr << "squig: " << e.what() << '\n';
    return cli::exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "squig: " << e.what() << '\n';
    return 1;
  }
  return cli::exit_invalid;
}
