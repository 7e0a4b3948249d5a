#include "tanz2/checks.hpp"
#include "tanz2/io.hpp"
#include "tanz2/scan.hpp"
#include "tanz2/symbolic.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

using namespace tanz2;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

// a+bi, a-bi, a, bi
Complex<double> parse_complex(const std::string& text) {
  static const std::regex num(R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)");
  static const std::regex full(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i$)");
  std::smatch m;
  if (std::regex_match(text, num)) return {std::stod(text), 0.0};
  if (std::regex_match(text, m, full)) {
    if (m[2].matched) return {std::stod(m[1]), std::stod(m[2])};
    return {0.0, std::stod(m[1])};
  }
  if (text == "i" || text == "+i") return {0.0, 1.0};
  if (text == "-i") return {0.0, -1.0};
  throw Error(Errc::BadArgument, "cannot read complex number '" + text + "' (expected a+bi)");
}

std::array<double, 4> parse_window(const std::string& text) {
  std::array<double, 4> w{};
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4) throw Error(Errc::BadArgument, "window needs exactly four numbers x0,y0,x1,y1");
    try {
      size_t used = 0;
      w[i] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(Errc::BadArgument, "bad window entry '" + item + "'");
    }
    ++i;
  }
  if (i != 4) throw Error(Errc::BadArgument, "window needs exactly four numbers x0,y0,x1,y1");
  if (!(w[2] > w[0]) || !(w[3] > w[1])) throw Error(Errc::BadArgument, "window corners must satisfy x0<x1, y0<y1");
  return w;
}

struct Config {
  std::string lambda;
  std::string window = "-3,-3,3,3";
  int res = default_resolution;
  int rows = 0;
  int budget = default_budget;
  std::string out;
  std::string format = "ppm";
  std::string report_format = "json";
  std::string kernel;
  bool flat = false;
  int depth = 12;
  double kappa = 2.0;
  int words = 100;
  std::uint64_t seed = 1;
  int basin_res = 256;
};

json complex_json(Complex<double> z) { return json{{"re", z.re}, {"im", z.im}}; }

void emit(const std::string& out, const std::string& data) {
  if (out.empty() || out == "-")
    std::cout << data;
  else
    write_text(out, data);
}

ScanOptions scan_options(const Config& c) {
  ScanOptions opt;
  if (c.kernel == "scalar")
    opt.kernel = KernelKind::Scalar;
  else if (c.kernel == "avx2")
    opt.kernel = KernelKind::Avx2;
  else if (!c.kernel.empty())
    throw Error(Errc::BadArgument, "kernel must be scalar or avx2");
  return opt;
}

GridSpec grid_of(const Config& c) {
  auto w = parse_window(c.window);
  if (c.res < 1 || c.rows < 0) throw Error(Errc::BadArgument, "resolution must be positive");
  return GridSpec::from_corners(w[0], w[1], w[2], w[3], c.res, c.rows > 0 ? c.rows : c.res);
}

void check_common(const Config& c) {
  if (c.budget < 1) throw Error(Errc::BadArgument, "budget must be positive");
  if (c.format != "ppm" && c.format != "json") throw Error(Errc::BadArgument, "format must be ppm or json");
}

void write_grid(const Config& c, const ClassifiedGrid& g, json meta) {
  if (c.format == "ppm") {
    emit(c.out, c.flat ? ppm_bytes(g, default_palette()) : ppm_bytes_shaded(g, default_palette()));
  } else {
    meta["defaults"] = numeric_defaults();
    emit(c.out, grid_to_json(g, meta).dump(2) + "\n");
  }
}

int run_dynplane(const Config& c) {
  check_common(c);
  Parameter p(parse_complex(c.lambda));
  GridSpec spec = grid_of(c);
  ClassifiedGrid g = scan_dynamical(p, spec, c.budget, scan_options(c));
  write_grid(c, g, json{{"plane", "dynamical"}, {"lambda", complex_json(p.lambda)}, {"budget", c.budget}});
  return 0;
}

int run_paramplane(const Config& c) {
  check_common(c);
  GridSpec spec = grid_of(c);
  ClassifiedGrid g = scan_parameter(spec, c.budget, scan_options(c));
  write_grid(c, g, json{{"plane", "parameter"}, {"budget", c.budget}});
  return 0;
}

int run_classify(const Config& c) {
  if (c.budget < 1) throw Error(Errc::BadArgument, "budget must be positive");
  Parameter p(parse_complex(c.lambda));
  ParameterClass pc = classify_parameter(p, c.budget);
  if (c.report_format != "json" && c.report_format != "text")
    throw Error(Errc::BadArgument, "format must be json or text");
  if (c.report_format == "json") {
    emit(c.out, report_json(pc, p, c.budget).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "lambda " << p.lambda.re << (p.lambda.im < 0 ? "" : "+") << p.lambda.im << "i: " << verdict_name(pc.verdict);
    if (pc.verdict == Verdict::AttractingCycle) os << " (period " << pc.period << ")";
    os << "\n";
    emit(c.out, os.str());
  }
  return 0;
}

int run_cantor(const Config& c) {
  if (!(c.kappa > 1)) throw Error(Errc::BadKappa, "kappa must exceed 1");
  if (c.depth < 1 || c.words < 1) throw Error(Errc::BadArgument, "depth and words must be positive");
  Parameter p(parse_complex(c.lambda));
  CantorReport rep = cantor_diagnostics(p, c.words, c.depth, c.kappa, c.seed);
  json j = report_json(rep);
  ParameterClass pc = classify_parameter(p, c.budget);
  j["verdict"] = verdict_name(pc.verdict);
  if (c.basin_res > 0) {
    auto w = parse_window(c.window);
    GridSpec spec = GridSpec::from_corners(w[0], w[1], w[2], w[3], c.basin_res, c.basin_res);
    j["basin"] = report_json(immediate_basin_heuristic(p, scan_dynamical(p, spec, c.budget, scan_options(c))));
  }
  emit(c.out, j.dump(2) + "\n");
  return 0;
}

int run_selftest() {
  bool all = true;
  for (const auto& r : run_all_checks()) {
    std::cout << format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : exit_numeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamics of lambda*tan(z^2): planes, classification and symbolic diagnostics"};
  app.require_subcommand(1);
  Config c;

  auto add_lambda = [&](CLI::App* s) { s->add_option("--lambda", c.lambda, "parameter as a+bi")->required(); };
  auto add_grid = [&](CLI::App* s) {
    s->add_option("--window", c.window, "x0,y0,x1,y1")->capture_default_str();
    s->add_option("--res", c.res, "columns (and rows unless --rows)")->capture_default_str();
    s->add_option("--rows", c.rows, "rows, defaults to --res");
    s->add_option("--format", c.format, "ppm or json")->capture_default_str();
    s->add_option("--kernel", c.kernel, "scalar or avx2 (default: detected)");
    s->add_flag("--flat", c.flat, "plain class colours without iteration-count shading");
  };
  auto add_budget = [&](CLI::App* s) { s->add_option("--budget", c.budget, "iteration budget")->capture_default_str(); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "output file, stdout if omitted"); };

  auto* dyn = app.add_subcommand("dynplane", "classify the dynamical plane for one parameter");
  add_lambda(dyn);
  add_grid(dyn);
  add_budget(dyn);
  add_out(dyn);

  auto* par = app.add_subcommand("paramplane", "classify a window of parameters");
  add_grid(par);
  add_budget(par);
  add_out(par);

  auto* cls = app.add_subcommand("classify", "classify one parameter by its singular orbit");
  add_lambda(cls);
  add_budget(cls);
  add_out(cls);
  cls->add_option("--format", c.report_format, "json or text")->capture_default_str();

  auto* can = app.add_subcommand("cantor", "cylinder diagnostics for sampled itineraries");
  add_lambda(can);
  add_budget(can);
  add_out(can);
  can->add_option("--depth", c.depth, "word depth")->capture_default_str();
  can->add_option("--kappa", c.kappa, "metric base, > 1")->capture_default_str();
  can->add_option("--words", c.words, "number of sampled words")->capture_default_str();
  can->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  can->add_option("--window", c.window, "basin window x0,y0,x1,y1")->capture_default_str();
  can->add_option("--basin-res", c.basin_res, "basin raster size, 0 to skip")->capture_default_str();
  can->add_option("--kernel", c.kernel, "scalar or avx2 (default: detected)");

  auto* self = app.add_subcommand("selftest", "run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  try {
    if (*dyn) return run_dynplane(c);
    if (*par) return run_paramplane(c);
    if (*cls) return run_classify(c);
    if (*can) return run_cantor(c);
    if (*self) return run_selftest();
  } catch (const Error& e) {
    std::cerr << "tanz2: " << e.what() << std::endl;
    return is_config_error(e.code()) ? exit_config : exit_numeric;
  } catch (const std::exception& e) {
    std::cerr << "tanz2: " << e.what() << std::endl;
    return exit_numeric;
  }
  return exit_config;
}
