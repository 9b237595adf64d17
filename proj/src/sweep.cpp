#include "circext/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "circext/bounds.hpp"
#include "circext/extremizer.hpp"
#include "circext/operator.hpp"

namespace circext {

SweepOptions::SweepOptions() {
  for (double R = 1024.0; R <= 1048576.0; R *= 4.0) R_schedule.push_back(R);
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void append_error(std::string& err, const std::string& what) {
  if (!err.empty()) err += "; ";
  err += what;
}

}  // namespace

std::vector<SweepRecord> sweep(const std::vector<SelfSimilarMeasure>& measures,
                               const SweepOptions& opts) {
  std::vector<SweepRecord> records;
  for (const auto& mu : measures) {
    for (double R : opts.R_schedule) {
      auto t0 = std::chrono::steady_clock::now();
      SweepRecord rec;
      rec.s = mu.dimension();
      rec.measure_id = mu.id();
      rec.R = R;
      rec.energy = rec.m_r = rec.ratio = kNaN;
      rec.extremizer_rayleigh = rec.knapp_rayleigh = kNaN;

      try {
        int N = 2 * default_band(R + std::cbrt(R));
        FourierTable table(mu, N);

        try {
          EnergyResult er = energy(table, R, opts.radius_grid, opts.tol,
                                   opts.threads);
          rec.energy = er.energy;
        } catch (const std::exception& e) {
          append_error(rec.error, std::string("energy: ") + e.what());
        }

        try {
          MRResult mr = m_r(mu, R, opts.alphas_per_octave);
          rec.m_r = mr.value;
        } catch (const std::exception& e) {
          append_error(rec.error, std::string("m_r: ") + e.what());
        }
        rec.ratio = rec.energy / rec.m_r;

        if (opts.with_extremizer) {
          try {
            BandFamily fam = band_family(R);
            RadiusSelection sel = select_radius(table, R, fam, opts.radius_grid);
            rec.extremizer_rayleigh = sel.extremizer.rayleigh;
          } catch (const std::exception& e) {
            append_error(rec.error, std::string("extremizer: ") + e.what());
          }
        }

        if (opts.with_knapp) {
          try {
            KnappWitness kw = knapp_g(mu, table, R);
            rec.knapp_rayleigh = kw.rayleigh;
          } catch (const std::exception& e) {
            append_error(rec.error, std::string("knapp: ") + e.what());
          }
        }
      } catch (const std::exception& e) {
        append_error(rec.error, e.what());
      }

      if (opts.timing) {
        auto t1 = std::chrono::steady_clock::now();
        rec.wall_time_seconds =
            std::chrono::duration<double>(t1 - t0).count();
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "s,measure_id,R,energy,m_r,ratio,extremizer_rayleigh,knapp_rayleigh,"
         "wall_time_seconds,error\n";
  for (const auto& r : records) {
    out << fmt6(r.s) << ',' << r.measure_id << ',' << fmt6(r.R) << ','
        << fmt6(r.energy) << ',' << fmt6(r.m_r) << ',' << fmt6(r.ratio) << ','
        << fmt6(r.extremizer_rayleigh) << ',' << fmt6(r.knapp_rayleigh) << ','
        << fmt6(r.wall_time_seconds) << ',' << r.error << '\n';
  }
  return out.str();
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open csv: " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(comma == std::string::npos
                           ? line.substr(start)
                           : line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      t.header = fields;
      first = false;
      continue;
    }
    std::vector<double> row(fields.size(), kNaN);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      try {
        std::size_t used = 0;
        double v = std::stod(fields[i], &used);
        if (used == fields[i].size()) row[i] = v;
      } catch (const std::exception&) {
      }
    }
    t.rows.push_back(std::move(row));
    t.cells.push_back(std::move(fields));
  }
  return t;
}

std::string fourier_table_to_csv(const FourierTable& table) {
  std::ostringstream out;
  out << "n,re,im\n";
  for (int n = -table.max_frequency(); n <= table.max_frequency(); ++n) {
    auto v = table.value(n);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", n, v.real(), v.imag());
    out << buf;
  }
  return out.str();
}

}  // namespace circext
