#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "circext/bessel.hpp"
#include "circext/bounds.hpp"
#include "circext/config.hpp"
#include "circext/extremizer.hpp"
#include "circext/fit.hpp"
#include "circext/measure.hpp"
#include "circext/operator.hpp"
#include "circext/oracle.hpp"
#include "circext/svg_plot.hpp"
#include "circext/sweep.hpp"
#include "circext/validate.hpp"

namespace {

using namespace circext;

SelfSimilarMeasure load_measure(const std::string& path, const std::string& name) {
  auto sections = parse_config_file(path);
  for (const auto& s : sections) {
    if (s.kind != "measure") continue;
    if (name.empty() || s.name == name) return measure_from_section(s);
  }
  throw std::invalid_argument("no [measure" + (name.empty() ? "" : " " + name) +
                              "] section in " + path);
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::fputs(data.c_str(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

int cmd_measure(const std::string& config, const std::string& name,
                int fourier_n, const std::string& out) {
  SelfSimilarMeasure mu = load_measure(config, name);
  std::printf("measure %s: m=%d rho=%.17g s=%.12g\n", mu.id().c_str(),
              mu.branch_count(), mu.ratio(), mu.dimension());
  if (fourier_n > 0) {
    FourierTable table(mu, fourier_n);
    write_output(out, fourier_table_to_csv(table));
  }
  return 0;
}

int cmd_bessel_validate(const std::string& out) {
  std::ostringstream csv;
  csv << "k,r,method,value,oracle,abs_err\n";
  char buf[160];
  // Production paths against the extended-precision series oracle.
  for (int k : {0, 1, 2, 5, 9, 20}) {
    for (double r : {0.5, 2.0, 6.0, 11.0}) {
      double v = bessel_j(k, r);  // series path for r <= 12
      double ref = oracle::bessel_j(k, r);
      std::snprintf(buf, sizeof buf, "%d,%.6g,series,%.17g,%.17g,%.3g\n", k, r,
                    v, ref, std::fabs(v - ref));
      csv << buf;
    }
    for (double r : {20.0, 60.0, 150.0}) {
      double v = bessel_j(k, r);  // recurrence path
      double ref = oracle::bessel_j(k, r);
      std::snprintf(buf, sizeof buf, "%d,%.6g,recurrence,%.17g,%.17g,%.3g\n", k,
                    r, v, ref, std::fabs(v - ref));
      csv << buf;
    }
  }
  for (int k : {100, 400, 1000}) {
    for (double lam : {1.001, 1.05, 1.2, 1.45}) {
      double r = lam * k;
      double lead = uniform_leading_term(k, r);
      double ref = bessel_j(k, r);
      std::snprintf(buf, sizeof buf,
                    "%d,%.6g,uniform_asymptotic,%.17g,%.17g,%.3g\n", k, r, lead,
                    ref, std::fabs(lead - ref));
      csv << buf;
    }
  }
  for (double r : {100.0, 1000.0, 10000.0}) {
    BesselVector bv = bessel_vector(r, static_cast<int>(1.3 * r) + 200);
    double norm = bv.values[0] * bv.values[0];
    for (std::size_t k = 1; k < bv.values.size(); ++k)
      norm += 2.0 * bv.values[k] * bv.values[k];
    std::snprintf(buf, sizeof buf, "0,%.6g,recurrence_norm,%.17g,1,%.3g\n", r,
                  norm, std::fabs(norm - 1.0));
    csv << buf;
  }
  write_output(out, csv.str());
  return 0;
}

int cmd_energy(const std::string& config, const std::string& name, double R,
               int grid, double tol, int threads) {
  SelfSimilarMeasure mu = load_measure(config, name);
  FourierTable table(mu, 2 * default_band(R + std::cbrt(R)));
  EnergyResult er = energy(table, R, grid, tol, threads);
  std::printf("R,r_star,energy,iterations,residual\n");
  std::printf("%.6g,%.10g,%.10g,%d,%.3g\n", er.R, er.r_star, er.energy,
              er.lanczos_iterations, er.residual);
  return 0;
}

int cmd_mr(const std::string& config, const std::string& name, double R,
           const std::string& mode, int per_octave) {
  SelfSimilarMeasure mu = load_measure(config, name);
  MrMode m = mode == "rectangle" ? MrMode::rectangle : MrMode::arc;
  MRResult res = m_r(mu, R, per_octave, m);
  double pred = predicted_m_r(mu.dimension(), R);
  std::printf("R,value,alpha_star,predicted,ratio\n");
  std::printf("%.6g,%.10g,%.6g,%.10g,%.6g\n", res.R, res.value, res.alpha_star,
              pred, res.value / pred);
  if (m == MrMode::rectangle)
    std::printf("# rectangle/arc diagnostic ratio: %.4g\n", res.rectangle_ratio);
  return 0;
}

int cmd_extremize(const std::string& config, const std::string& name, double R,
                  int grid, bool knapp) {
  SelfSimilarMeasure mu = load_measure(config, name);
  std::printf("R,r_star,rayleigh,norm_sq,bands\n");
  if (knapp) {
    FourierTable table(mu, static_cast<int>(std::ceil(90.0 * std::cbrt(R))));
    KnappWitness w = knapp_g(mu, table, R);
    std::printf("%.6g,%.10g,%.10g,%.10g,%d\n", R, w.R, w.rayleigh, w.norm_sq, 0);
    return 0;
  }
  BandFamily fam = band_family(R);
  FourierTable table(
      mu, static_cast<int>(fam.k_max() - fam.k_min()) + 8);
  RadiusSelection sel = select_radius(table, R, fam, grid);
  std::printf("%.6g,%.10g,%.10g,%.10g,%d\n", R, sel.r_star,
              sel.extremizer.rayleigh, sel.extremizer.norm_sq,
              sel.extremizer.bands_used);
  return 0;
}

int cmd_sweep(const std::string& config, const std::string& out,
              const std::string& plot_path, bool timing, int threads) {
  auto sections = parse_config_file(config);
  std::vector<SelfSimilarMeasure> measures;
  SweepOptions opts;
  opts.timing = timing;
  opts.threads = threads;
  for (const auto& s : sections) {
    if (s.kind == "measure") {
      measures.push_back(measure_from_section(s));
    } else if (s.kind == "sweep") {
      double r_min = parse_rational(s.get_or("r_min", "1024"));
      double r_max = parse_rational(s.get_or("r_max", "1048576"));
      double factor = parse_rational(s.get_or("r_factor", "4"));
      opts.R_schedule.clear();
      for (double R = r_min; R <= r_max * (1 + 1e-9); R *= factor)
        opts.R_schedule.push_back(R);
      opts.radius_grid = static_cast<int>(parse_rational(s.get_or("grid", "9")));
      opts.tol = parse_rational(s.get_or("tol", "1e-8"));
      opts.alphas_per_octave =
          static_cast<int>(parse_rational(s.get_or("alphas_per_octave", "4")));
      opts.with_knapp = s.get_or("knapp", "1") != "0";
      opts.with_extremizer = s.get_or("extremizer", "1") != "0";
    }
  }
  auto records = sweep(measures, opts);
  write_output(out, records_to_csv(records));
  if (!plot_path.empty() && !records.empty()) {
    PlotSpec spec;
    spec.title = "energy / M_R";
    write_output(plot_path, emit_plot(records, spec));
  }
  return 0;
}

int cmd_fit(const std::string& csv, const std::string& x_col,
            const std::string& y_col, const std::string& kind_name) {
  CsvTable t = read_csv(csv);
  int xi = t.column(x_col), yi = t.column(y_col);
  if (xi < 0 || yi < 0)
    throw std::invalid_argument("fit: column not found in " + csv);
  std::vector<double> x, y;
  for (const auto& row : t.rows) x.push_back(row[xi]), y.push_back(row[yi]);
  FitKind kind = kind_name == "log_linear" ? FitKind::log_linear : FitKind::power_law;
  FitReport fr = fit_scaling(x, y, kind);
  std::printf("kind,slope,intercept,r_squared,n_points\n");
  std::printf("%s,%.10g,%.10g,%.6g,%d\n", fit_kind_name(fr.kind).c_str(),
              fr.slope, fr.intercept, fr.r_squared, fr.n_points);
  return 0;
}

int cmd_plot(const std::string& csv, const std::string& out,
             const std::string& column) {
  CsvTable t = read_csv(csv);
  std::vector<SweepRecord> records;
  int ci_s = t.column("s"), ci_id = t.column("measure_id"), ci_R = t.column("R");
  if (ci_s < 0 || ci_id < 0 || ci_R < 0)
    throw std::invalid_argument("plot: csv lacks sweep columns");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    SweepRecord r;
    r.s = t.rows[i][ci_s];
    r.measure_id = t.cells[i][ci_id];
    r.R = t.rows[i][ci_R];
    auto field = [&](const char* name) {
      int c = t.column(name);
      return c < 0 ? std::numeric_limits<double>::quiet_NaN() : t.rows[i][c];
    };
    r.energy = field("energy");
    r.m_r = field("m_r");
    r.ratio = field("ratio");
    r.extremizer_rayleigh = field("extremizer_rayleigh");
    r.knapp_rayleigh = field("knapp_rayleigh");
    records.push_back(std::move(r));
  }
  PlotSpec spec;
  spec.y_column = column;
  write_output(out, emit_plot(records, spec));
  return 0;
}

int cmd_validate(const std::vector<std::string>& suites, bool corrupt) {
  ValidateOptions opts;
  opts.suites = suites;
  opts.inject_corrupt_table = corrupt;
  auto results = run_validation(opts);
  bool all_ok = true;
  std::printf("%-12s %-6s %8s  %s\n", "suite", "state", "seconds", "detail");
  for (const auto& r : results) {
    all_ok &= r.passed;
    std::printf("%-12s %-6s %8.2f  %s\n", r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
  }
  if (results.empty()) {
    std::fprintf(stderr, "no matching suite\n");
    return 2;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted circle-extension energy toolkit"};
  app.require_subcommand(1);

  std::string config, name, out, plot_path, csv, x_col = "R", y_col = "ratio";
  std::string mode = "arc", kind = "power_law", column = "ratio";
  double R = 4096.0, tol = 1e-8;
  int grid = 9, fourier_n = 0, per_octave = 4, threads = 2;
  bool knapp = false, timing = false, corrupt = false;
  std::vector<std::string> suites;

  auto* c_measure = app.add_subcommand("measure", "Validate a measure config; optional Fourier CSV export");
  c_measure->add_option("--config", config)->required();
  c_measure->add_option("--name", name);
  c_measure->add_option("--fourier", fourier_n);
  c_measure->add_option("--out", out);

  auto* c_bv = app.add_subcommand("bessel-validate", "Bessel accuracy report CSV");
  c_bv->add_option("--out", out);

  auto* c_energy = app.add_subcommand("energy", "Extension energy at one R");
  c_energy->add_option("--measure", config)->required();
  c_energy->add_option("--name", name);
  c_energy->add_option("--R", R)->required();
  c_energy->add_option("--grid", grid);
  c_energy->add_option("--tol", tol);
  c_energy->add_option("--threads", threads);

  auto* c_mr = app.add_subcommand("mr", "Geometric constant M_R");
  c_mr->add_option("--measure", config)->required();
  c_mr->add_option("--name", name);
  c_mr->add_option("--R", R)->required();
  c_mr->add_option("--mode", mode)->check(CLI::IsMember({"arc", "rectangle"}));
  c_mr->add_option("--alphas-per-octave", per_octave);

  auto* c_ext = app.add_subcommand("extremize", "Section-3 lower-bound witness");
  c_ext->add_option("--measure", config)->required();
  c_ext->add_option("--name", name);
  c_ext->add_option("--R", R)->required();
  c_ext->add_option("--grid", grid);
  c_ext->add_flag("--knapp", knapp);

  auto* c_sweep = app.add_subcommand("sweep", "Full (measure, R) sweep to CSV");
  c_sweep->add_option("--config", config)->required();
  c_sweep->add_option("--out", out);
  c_sweep->add_option("--plot", plot_path);
  c_sweep->add_flag("--timing", timing);
  c_sweep->add_option("--threads", threads);

  auto* c_fit = app.add_subcommand("fit", "Least-squares scaling fit on CSV columns");
  c_fit->add_option("--csv", csv)->required();
  c_fit->add_option("--x", x_col);
  c_fit->add_option("--y", y_col);
  c_fit->add_option("--kind", kind)->check(CLI::IsMember({"power_law", "log_linear"}));

  auto* c_plot = app.add_subcommand("plot", "Render sweep CSV to SVG");
  c_plot->add_option("--csv", csv)->required();
  c_plot->add_option("--out", out);
  c_plot->add_option("--column", column);

  auto* c_val = app.add_subcommand("validate", "Run module invariant suites");
  c_val->add_option("--suite", suites);
  c_val->add_flag("--inject-corrupt-table", corrupt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_measure))
      return cmd_measure(config, name, fourier_n, out);
    if (app.got_subcommand(c_bv)) return cmd_bessel_validate(out);
    if (app.got_subcommand(c_energy))
      return cmd_energy(config, name, R, grid, tol, threads);
    if (app.got_subcommand(c_mr)) return cmd_mr(config, name, R, mode, per_octave);
    if (app.got_subcommand(c_ext)) return cmd_extremize(config, name, R, grid, knapp);
    if (app.got_subcommand(c_sweep))
      return cmd_sweep(config, out, plot_path, timing, threads);
    if (app.got_subcommand(c_fit)) return cmd_fit(csv, x_col, y_col, kind);
    if (app.got_subcommand(c_plot)) return cmd_plot(csv, out, column);
    if (app.got_subcommand(c_val)) return cmd_validate(suites, corrupt);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
