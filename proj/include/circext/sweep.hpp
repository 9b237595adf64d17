#pragma once

#include <string>
#include <vector>

#include "circext/measure.hpp"

namespace circext {

struct SweepRecord {
  double s = 0.0;
  std::string measure_id;
  double R = 0.0;
  double energy = 0.0;
  double m_r = 0.0;
  double ratio = 0.0;  // energy / m_r
  double extremizer_rayleigh = 0.0;
  double knapp_rayleigh = 0.0;
  double wall_time_seconds = 0.0;
  std::string error;  // empty on success; partial fields are NaN on failure
};

struct SweepOptions {
  std::vector<double> R_schedule;  // default 2^10 .. 2^20, factor 4
  int radius_grid = 9;
  double tol = 1e-8;
  int alphas_per_octave = 4;
  bool with_knapp = true;
  bool with_extremizer = true;
  bool timing = false;  // wall_time_seconds stays 0 unless set (determinism)
  int threads = 2;

  SweepOptions();
};

/// One record per (measure, R), in config order; per-record failures land in
/// the error column and leave the remaining fields usable.
std::vector<SweepRecord> sweep(const std::vector<SelfSimilarMeasure>& measures,
                               const SweepOptions& opts);

/// Canonical CSV (header row, LF endings, %.6g fields).
std::string records_to_csv(const std::vector<SweepRecord>& records);

/// Minimal CSV reader: header + numeric columns (non-numeric cells -> NaN).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::vector<std::string>> cells;

  int column(const std::string& name) const;  // -1 if absent
};
CsvTable read_csv(const std::string& path);

/// Fourier table export: columns n, re, im over [-N, N].
std::string fourier_table_to_csv(const FourierTable& table);

}  // namespace circext
