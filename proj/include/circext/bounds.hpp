#pragma once

#include <string>

#include "circext/measure.hpp"

namespace circext {

enum class MrMode { arc, rectangle };

struct MRResult {
  double R = 0.0;
  double value = 0.0;       // sup over scales of mu(window)/alpha
  double alpha_star = 0.0;  // maximizing scale, in [1/R, R^{-2/3}]
  double arc_center = 0.0;
  MrMode mode = MrMode::arc;
  double rectangle_ratio = 1.0;  // rectangle mode: best 2d placement / arc value
};

/// M_R(mu): sup over alpha in [1/R, R^{-2/3}] (geometric grid,
/// alphas_per_octave points per factor two) and over window centers of
/// mu(arc of length alpha^2 R)/alpha.  Rectangle mode additionally samples
/// true planar rectangle placements as a diagnostic.
MRResult m_r(const SelfSimilarMeasure& mu, double R, int alphas_per_octave = 4,
             MrMode mode = MrMode::arc);

/// Proposition-predicted power of R: R^{(2-s)/3} for s >= 1/2, R^{1-s} below.
double predicted_m_r(double s, double R);

/// Best center of a length-window arc (max sliding-window mass); used by the
/// Knapp construction.  Returns the center; mass_out gets the window mass.
double best_arc_center(const SelfSimilarMeasure& mu, double window,
                       double* mass_out = nullptr);

}  // namespace circext
