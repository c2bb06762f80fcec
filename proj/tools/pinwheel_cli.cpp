// Command-line front end for the pinwheel library: coherent-state reports,
// association fans, field synthesis, pinwheel maps, radial spectra, and the
// self-validation suite.
//
// Exit codes: 0 success, 1 runtime failure, 2 configuration error.
// The PINWHEEL_WORKERS environment variable caps the worker count; all
// outputs are byte-identical for any cap.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pinwheel/pinwheel.hpp"

namespace pw = pinwheel;
using nlohmann::json;

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Options {
  double omega = 1.0;
  double lambda = kUnset;      // defaults to 1/(2 omega)
  double theta = 0.0;
  double half_width = kUnset;  // defaults to 8 pi / omega
  std::size_t grid_n = 256;
  std::size_t m = 256;
  int n_orient = 8;
  std::string phase = "zero";
  double phase_c = 1.0;
  std::uint64_t seed = 7;
  int cutoff = 4;
  double amplitude = std::numbers::pi;
  std::string mode = "real";
  std::string estimator = "vector_sum";
  std::string out_dir = "pinwheel_out";
  std::string formats = "csv,images,json";
  std::string config_path;
  // fan
  std::string k_list = "-1,-0.75,-0.5,-0.25,0,0.25,0.5,0.75,1";
  double s_max = std::numbers::pi / 2.0;
  int n_steps = 200;
  double q1 = 0.0;
  double q2 = 0.0;
  // map limits
  bool bessel = false;
  bool plane_wave = false;
  // spectrum
  int n_bins = 128;
  double epsilon = 0.15;
  std::string window = "none";
  std::string field_kind = "sum";
  // validate
  int n_random_states = 1000;
};

void resolve_defaults(Options& o) {
  if (std::isnan(o.lambda)) o.lambda = 1.0 / (2.0 * o.omega);
  if (std::isnan(o.half_width)) o.half_width = 8.0 * std::numbers::pi / o.omega;
}

pw::PhaseSpec phase_of(const Options& o) {
  if (o.phase == "zero") return pw::ZeroPhase{};
  if (o.phase == "linear") return pw::LinearPhase{o.phase_c};
  if (o.phase == "random") return pw::RandomSmoothPhase{o.seed, o.cutoff, o.amplitude};
  throw pw::ConfigError("phase: expected zero|linear|random, got '" + o.phase + "'");
}

pw::ActivityMode mode_of(const Options& o) {
  if (o.mode == "real") return pw::ActivityMode::RealPart;
  if (o.mode == "modulus") return pw::ActivityMode::Modulus;
  if (o.mode == "phase") return pw::ActivityMode::Phase;
  throw pw::ConfigError("mode: expected real|modulus|phase, got '" + o.mode + "'");
}

pw::SpectrumWindow window_of(const Options& o) {
  if (o.window == "none") return pw::SpectrumWindow::None;
  if (o.window == "hann") return pw::SpectrumWindow::Hann;
  throw pw::ConfigError("window: expected none|hann, got '" + o.window + "'");
}

pw::GridSpec grid_of(const Options& o) { return pw::GridSpec{o.grid_n, o.grid_n, o.half_width}; }

std::vector<double> parse_k_list(const std::string& text) {
  std::vector<double> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw pw::ConfigError("k-list: cannot parse '" + item + "'");
    ks.push_back(v);
  }
  if (ks.empty()) throw pw::ConfigError("k-list: empty");
  return ks;
}

bool wants_format(const Options& o, const std::string& what) {
  return ("," + o.formats + ",").find("," + what + ",") != std::string::npos;
}

// Flat key=value config file: blank lines and '#' comments are skipped, keys
// are the long option names without the leading dashes. Values go through
// the same converters as command-line arguments; options already set on the
// command line keep their values (flags win).
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pw::ConfigError("config: cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  const auto trim = [](const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw pw::ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw pw::ConfigError("config: unknown key '" + key + "'");
    if (!opt->empty()) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

// Fully-resolved configuration echo: every sidecar embeds this so artifacts
// are self-describing.
json config_echo(const Options& o, const std::string& command) {
  json j;
  j["command"] = command;
  j["omega"] = o.omega;
  j["lambda"] = o.lambda;
  j["theta"] = pw::normalize_orientation(o.theta);
  j["half_width"] = o.half_width;
  j["grid_n"] = o.grid_n;
  j["m"] = o.m;
  j["n_orient"] = o.n_orient;
  j["phase"] = o.phase;
  if (o.phase == "linear") j["phase_c"] = o.phase_c;
  if (o.phase == "random") {
    j["seed"] = o.seed;
    j["cutoff"] = o.cutoff;
    j["amplitude"] = o.amplitude;
  }
  j["mode"] = o.mode;
  j["estimator"] = o.estimator;
  j["n_bins"] = o.n_bins;
  j["epsilon"] = o.epsilon;
  j["window"] = o.window;
  j["formats"] = o.formats;
  return j;
}

std::filesystem::path ensure_out_dir(const Options& o) {
  std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_artifact(const std::filesystem::path& path, const std::string& bytes,
                           json& hashes) {
  pw::write_text_file(path.string(), bytes);
  hashes[path.filename().string()] = pw::fnv1a64_hex(bytes);
  return path.string();
}

// r = |f(phi)| as a closed polar curve (doubled to [0, 2pi) for symmetry).
std::string polar_svg_of_state(const pw::CircleFunction& f) {
  std::vector<pw::PlanarPoint> curve;
  const auto phi = pw::circle_nodes(f.size());
  curve.reserve(2 * f.size() + 1);
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double a = phi[j] + rep * std::numbers::pi;
      const double r = std::abs(f.v[j]);
      curve.push_back({r * std::cos(a), r * std::sin(a)});
    }
  curve.push_back(curve.front());
  return pw::svg_of_polylines({curve});
}

int cmd_state(Options o) {
  resolve_defaults(o);
  const pw::OperatorContext ctx{o.omega};
  const pw::CoherentStateParams params{o.omega, o.lambda, o.theta, phase_of(o), o.m};
  const auto f = pw::coherent_state(params);

  const double d1 = pw::std_dev(pw::Generator::X1, ctx, f);
  const double d2 = pw::std_dev(pw::Generator::X2, ctx, f);
  const double x3 = std::abs(pw::expectation(pw::Generator::X3, ctx, f));

  json report;
  report["delta_x1"] = d1;
  report["delta_x2"] = d2;
  report["x3_abs"] = x3;
  report["half_x3_abs"] = 0.5 * x3;
  report["gap"] = pw::uncertainty_gap(ctx, f);
  report["circular_std"] = pw::circular_std(f);
  const auto [n1, n2] = pw::normalized_uncertainty_pair(ctx, f);
  report["normalized_delta_x1"] = n1;
  report["normalized_delta_x2"] = n2;
  report["theta"] = pw::normalize_orientation(o.theta);
  report["config"] = config_echo(o, "state");

  const auto dir = ensure_out_dir(o);
  json hashes;
  if (wants_format(o, "csv"))
    write_artifact(dir / "state.csv", pw::csv_of_circle_function(f), hashes);
  if (wants_format(o, "images"))
    write_artifact(dir / "state_polar.svg", polar_svg_of_state(f), hashes);
  json sidecar;
  sidecar["config"] = config_echo(o, "state");
  sidecar["report"] = report;
  sidecar["hashes"] = hashes;
  pw::write_text_file((dir / "state_sidecar.json").string(), sidecar.dump(2) + "\n");

  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_fan(Options o) {
  resolve_defaults(o);
  const auto ks = parse_k_list(o.k_list);
  const auto g = pw::make_element(o.q1, o.q2, o.theta);
  const auto fan = pw::association_fan(ks, g, o.s_max, o.n_steps);

  const auto dir = ensure_out_dir(o);
  json hashes;
  if (wants_format(o, "csv")) write_artifact(dir / "fan.csv", pw::csv_of_fan(fan, o.s_max), hashes);
  if (wants_format(o, "images"))
    write_artifact(dir / "fan.svg", pw::svg_of_polylines(fan), hashes);

  json sidecar;
  sidecar["config"] = config_echo(o, "fan");
  sidecar["k_values"] = ks;
  sidecar["s_max"] = o.s_max;
  sidecar["n_steps"] = o.n_steps;
  sidecar["base"] = {{"q1", g.q1}, {"q2", g.q2}, {"theta", g.theta}};
  sidecar["hashes"] = hashes;
  pw::write_text_file((dir / "fan_sidecar.json").string(), sidecar.dump(2) + "\n");
  std::cout << sidecar.dump(2) << "\n";
  return 0;
}

int cmd_map(Options o) {
  resolve_defaults(o);
  if (o.bessel && o.plane_wave)
    throw pw::ConfigError("map: --bessel and --plane-wave are mutually exclusive");
  const auto grid = grid_of(o);

  pw::ComplexField field;
  if (o.bessel) {
    field = pw::bessel_limit(o.omega, grid, o.m);
  } else if (o.plane_wave) {
    field = pw::plane_wave_limit(o.omega, o.theta, grid);
  } else {
    field = pw::synthesize(o.omega, pw::coherent_state({o.omega, o.lambda, o.theta, phase_of(o), o.m}),
                           grid);
  }

  const auto values = pw::activity_map(field, mode_of(o));
  pw::GrayNormalization norm{};
  const auto gray = pw::to_gray_image(values, grid.nx, grid.ny, &norm);
  const auto spec = pw::radial_power_spectrum(field, o.n_bins);

  const auto dir = ensure_out_dir(o);
  json hashes;
  if (wants_format(o, "csv"))
    write_artifact(dir / "map_field.csv", pw::csv_of_field(field), hashes);
  if (wants_format(o, "images")) {
    pw::write_pgm((dir / "map_gray.pgm").string(), gray);
    hashes["map_gray.pgm"] = pw::fnv1a64_hex(pw::read_binary_file((dir / "map_gray.pgm").string()));
  }

  json sidecar;
  sidecar["config"] = config_echo(o, "map");
  sidecar["limit"] = o.bessel ? "bessel" : (o.plane_wave ? "plane_wave" : "none");
  sidecar["normalization"] = {{"min", norm.minimum}, {"max", norm.maximum}};
  const std::size_t origin = (grid.nx / 2) * grid.ny + grid.ny / 2;
  sidecar["origin_value"] = {{"re", field.v[origin].real()}, {"im", field.v[origin].imag()}};
  sidecar["spectrum_peak_radius"] =
      pw::annulus_metrics(spec, o.omega, o.epsilon).peak_radius;
  sidecar["hashes"] = hashes;
  pw::write_text_file((dir / "map_sidecar.json").string(), sidecar.dump(2) + "\n");
  std::cout << sidecar.dump(2) << "\n";
  return 0;
}

int cmd_pinwheel(Options o) {
  resolve_defaults(o);
  const auto grid = grid_of(o);
  const pw::CoherentStateParams base{o.omega, o.lambda, 0.0, phase_of(o), o.m};
  const auto stack =
      pw::activity_stack(base, pw::OrientationSampleSet{o.n_orient}, grid, mode_of(o));

  pw::OrientationMap omap;
  if (o.estimator == "vector_sum")
    omap = pw::vector_sum_orientation(stack);
  else if (o.estimator == "argmax")
    omap = pw::argmax_orientation(stack);
  else
    throw pw::ConfigError("estimator: expected vector_sum|argmax, got '" + o.estimator + "'");

  const auto pins = pw::detect_pinwheels(omap);
  double net_charge = 0.0;
  for (const auto& p : pins) net_charge += p.charge;
  const long winding = pw::boundary_winding(omap);

  const auto zsum = pw::order_sum_field(stack);
  const auto spec = pw::radial_power_spectrum(zsum, o.n_bins, window_of(o));
  const auto ann = pw::annulus_metrics(spec, o.omega, o.epsilon);

  const auto dir = ensure_out_dir(o);
  json hashes;
  if (wants_format(o, "images")) {
    for (int j = 0; j < o.n_orient; ++j) {
      char name[32];
      std::snprintf(name, sizeof(name), "activity_%02d.pgm", j);
      pw::GrayNormalization gn{};
      const auto img =
          pw::to_gray_image(stack.maps[static_cast<std::size_t>(j)], grid.nx, grid.ny, &gn);
      pw::write_pgm((dir / name).string(), img);
      hashes[name] = pw::fnv1a64_hex(pw::read_binary_file((dir / name).string()));
    }
    const auto png = pw::encode_png(pw::render_pinwheel_image(omap));
    write_artifact(dir / "pinwheel.png", std::string(png.begin(), png.end()), hashes);
  }
  if (wants_format(o, "csv")) {
    write_artifact(dir / "orientation_map.csv", pw::csv_of_orientation_map(omap), hashes);
    write_artifact(dir / "spectrum.csv", pw::csv_of_spectrum(spec), hashes);
  }

  json pin_json = json::array();
  for (const auto& p : pins) pin_json.push_back({{"x", p.x1}, {"y", p.x2}, {"charge", p.charge}});
  write_artifact(dir / "pinwheels.json", pin_json.dump(2) + "\n", hashes);

  json summary;
  summary["config"] = config_echo(o, "pinwheel");
  summary["pinwheel_count"] = pins.size();
  summary["net_charge"] = net_charge;
  summary["boundary_winding_doubled"] = winding;
  summary["boundary_winding_charge"] = 0.5 * static_cast<double>(winding);
  summary["peak_radius"] = ann.peak_radius;
  summary["fraction_in_annulus"] = ann.fraction_in_annulus;
  summary["hashes"] = hashes;
  pw::write_text_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

// Log-power 2D spectrum (fftshifted) with the |k| = Omega circle overlaid.
pw::RgbImage spectrum_plot(const pw::ComplexField& field, double omega) {
  const auto& g = field.grid;
  const auto spec = pw::dft2(field.v, g.nx, g.ny);
  std::vector<double> logp(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i)
    logp[i] = std::log10(std::norm(spec[i]) / static_cast<double>(g.nx * g.ny) + 1e-12);
  double lo = logp[0], hi = logp[0];
  for (const double v : logp) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  pw::RgbImage img{g.nx, g.ny, std::vector<std::uint8_t>(g.nx * g.ny * 3, 0)};
  const double kunit = std::numbers::pi / g.half_width;
  for (std::size_t row = 0; row < g.ny; ++row) {
    for (std::size_t col = 0; col < g.nx; ++col) {
      // center the DC mode
      const std::size_t ix = (col + g.nx / 2) % g.nx;
      const std::size_t iy = (g.ny - 1 - row + g.ny / 2) % g.ny;
      const double m1 = ix < g.nx / 2 ? static_cast<double>(ix)
                                      : static_cast<double>(ix) - static_cast<double>(g.nx);
      const double m2 = iy < g.ny / 2 ? static_cast<double>(iy)
                                      : static_cast<double>(iy) - static_cast<double>(g.ny);
      const double k = kunit * std::hypot(m1, m2);
      const auto v = pw::quantize8((logp[ix * g.ny + iy] - lo) / span);
      const std::size_t off = (row * g.nx + col) * 3;
      if (std::abs(k - omega) < 0.5 * kunit) {  // one-mode-wide ring marker
        img.pixels[off] = 255;
        img.pixels[off + 1] = v / 3;
        img.pixels[off + 2] = v / 3;
      } else {
        img.pixels[off] = img.pixels[off + 1] = img.pixels[off + 2] = v;
      }
    }
  }
  return img;
}

int cmd_spectrum(Options o) {
  resolve_defaults(o);
  const auto grid = grid_of(o);

  pw::ComplexField field;
  if (o.field_kind == "state") {
    field = pw::synthesize(o.omega, pw::coherent_state({o.omega, o.lambda, o.theta, phase_of(o), o.m}),
                           grid);
  } else {
    const pw::CoherentStateParams base{o.omega, o.lambda, 0.0, phase_of(o), o.m};
    const auto stack =
        pw::activity_stack(base, pw::OrientationSampleSet{o.n_orient}, grid, mode_of(o));
    if (o.field_kind == "sum")
      field = pw::order_sum_field(stack);
    else if (o.field_kind == "normalized")
      field = pw::complex_order_field(pw::vector_sum_orientation(stack));
    else
      throw pw::ConfigError("field: expected sum|normalized|state, got '" + o.field_kind + "'");
  }

  const auto spec = pw::radial_power_spectrum(field, o.n_bins, window_of(o));
  const auto ann = pw::annulus_metrics(spec, o.omega, o.epsilon);

  const auto dir = ensure_out_dir(o);
  json hashes;
  if (wants_format(o, "csv")) write_artifact(dir / "spectrum.csv", pw::csv_of_spectrum(spec), hashes);
  if (wants_format(o, "images")) {
    const auto png = pw::encode_png(spectrum_plot(field, o.omega));
    write_artifact(dir / "spectrum.png", std::string(png.begin(), png.end()), hashes);
  }

  json out;
  out["config"] = config_echo(o, "spectrum");
  out["field"] = o.field_kind;
  out["peak_radius"] = ann.peak_radius;
  out["fraction_in_annulus"] = ann.fraction_in_annulus;
  out["bin_width"] = spec.bin_width();
  out["dc_power"] = spec.dc_power;
  out["hashes"] = hashes;
  pw::write_text_file((dir / "annulus.json").string(), out.dump(2) + "\n");
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_validate(Options o) {
  resolve_defaults(o);
  pw::ValidationConfig cfg;
  cfg.omega = o.omega;
  cfg.lambda = o.lambda;
  cfg.m = o.m;
  cfg.seed = o.seed;
  cfg.n_random_states = o.n_random_states;
  cfg.n_orient = o.n_orient;
  cfg.grid = grid_of(o);
  cfg.n_bins = o.n_bins;
  cfg.epsilon = o.epsilon;
  cfg.mode = mode_of(o);

  const auto report = pw::run_validation_suite(cfg);
  bool all_pass = true;
  json checks = json::array();
  for (const auto& c : report) {
    checks.push_back({{"name", c.name},
                      {"bound", c.bound},
                      {"measured", c.measured},
                      {"direction", c.measured_must_exceed ? "at_least" : "at_most"},
                      {"pass", c.pass}});
    all_pass = all_pass && c.pass;
  }
  json out;
  out["config"] = config_echo(o, "validate");
  out["checks"] = checks;
  out["all_pass"] = all_pass;

  const auto dir = ensure_out_dir(o);
  pw::write_text_file((dir / "validate_report.json").string(), out.dump(2) + "\n");
  std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

void add_state_options(CLI::App* sub, Options& o) {
  sub->add_option("--omega", o.omega, "Circle radius / inverse correlation length");
  sub->add_option("--lambda", o.lambda, "Concentration parameter (default 1/(2 omega))");
  sub->add_option("--theta", o.theta, "Orientation, normalized to [0, pi)");
  sub->add_option("--m", o.m, "Circle sample count (even)");
  sub->add_option("--phase", o.phase, "Local phase: zero|linear|random");
  sub->add_option("--phase-c", o.phase_c, "Slope for --phase linear");
  sub->add_option("--seed", o.seed, "Seed for --phase random");
  sub->add_option("--cutoff", o.cutoff, "Highest phase mode for --phase random");
  sub->add_option("--amplitude", o.amplitude, "Max |alpha| for --phase random");
  sub->add_option("--out", o.out_dir, "Output directory");
  sub->add_option("--formats", o.formats, "Comma list of csv,images,json");
  sub->add_option("--config", o.config_path, "Flat key=value config file (flags win)");
}

void add_grid_options(CLI::App* sub, Options& o) {
  sub->add_option("--grid-n", o.grid_n, "Grid nodes per axis");
  sub->add_option("--half-width", o.half_width, "Grid half width L (default 8 pi / omega)");
  sub->add_option("--mode", o.mode, "Activity extraction: real|modulus|phase");
}

void add_spectrum_options(CLI::App* sub, Options& o) {
  sub->add_option("--n-bins", o.n_bins, "Radial bins");
  sub->add_option("--epsilon", o.epsilon, "Annulus half width (relative)");
  sub->add_option("--window", o.window, "Spectral window: none|hann");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SE(2) coherent-state pinwheel toolkit"};
  app.require_subcommand(1);
  app.footer("Environment: PINWHEEL_WORKERS caps the worker count (outputs are identical).");

  Options o_state, o_fan, o_map, o_pin, o_spec, o_val;
  o_pin.phase = "random";
  o_spec.phase = "random";
  o_pin.out_dir = "pinwheel_out";
  o_state.out_dir = "state_out";
  o_fan.out_dir = "fan_out";
  o_map.out_dir = "map_out";
  o_spec.out_dir = "spectrum_out";
  o_val.out_dir = "validate_out";

  auto* state = app.add_subcommand("state", "Coherent state: CSV, polar plot, uncertainty report");
  add_state_options(state, o_state);

  auto* fan = app.add_subcommand("fan", "Fan of integral curves through a base element");
  add_state_options(fan, o_fan);
  fan->add_option("--k-list", o_fan.k_list, "Comma list of curvatures");
  fan->add_option("--s-max", o_fan.s_max, "Arclength bound");
  fan->add_option("--n-steps", o_fan.n_steps, "Integrator steps");
  fan->add_option("--q1", o_fan.q1, "Base point x1");
  fan->add_option("--q2", o_fan.q2, "Base point x2");

  auto* map = app.add_subcommand("map", "Synthesize one activity map");
  add_state_options(map, o_map);
  add_grid_options(map, o_map);
  add_spectrum_options(map, o_map);
  map->add_flag("--bessel", o_map.bessel, "Render the lambda -> 0 limit (Bessel rings)");
  map->add_flag("--plane-wave", o_map.plane_wave, "Render the lambda -> inf limit");

  auto* pin = app.add_subcommand("pinwheel", "Full pipeline: stack, orientation map, singularities");
  add_state_options(pin, o_pin);
  add_grid_options(pin, o_pin);
  add_spectrum_options(pin, o_pin);
  pin->add_option("--n-orient", o_pin.n_orient, "Grating orientations");
  pin->add_option("--estimator", o_pin.estimator, "vector_sum|argmax");

  auto* spec = app.add_subcommand("spectrum", "Radial power spectrum and annulus metrics");
  add_state_options(spec, o_spec);
  add_grid_options(spec, o_spec);
  add_spectrum_options(spec, o_spec);
  spec->add_option("--n-orient", o_spec.n_orient, "Grating orientations (pipeline fields)");
  spec->add_option("--field", o_spec.field_kind, "sum|normalized|state");

  auto* val = app.add_subcommand("validate", "Run the property suite, report pass/fail");
  add_state_options(val, o_val);
  add_grid_options(val, o_val);
  add_spectrum_options(val, o_val);
  val->add_option("--n-orient", o_val.n_orient, "Grating orientations");
  val->add_option("--n-random-states", o_val.n_random_states, "Random states for the inequality");

  try {
    app.parse(argc, argv);
    const auto dispatch = [](CLI::App* sub, Options& o, int (*cmd)(Options)) {
      if (!o.config_path.empty()) apply_config_file(sub, o.config_path);
      return cmd(std::move(o));
    };
    if (state->parsed()) return dispatch(state, o_state, cmd_state);
    if (fan->parsed()) return dispatch(fan, o_fan, cmd_fan);
    if (map->parsed()) return dispatch(map, o_map, cmd_map);
    if (pin->parsed()) return dispatch(pin, o_pin, cmd_pinwheel);
    if (spec->parsed()) return dispatch(spec, o_spec, cmd_spectrum);
    if (val->parsed()) return dispatch(val, o_val, cmd_validate);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pw::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
