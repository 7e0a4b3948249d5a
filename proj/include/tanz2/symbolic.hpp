#pragma once

#include "tanz2/inverse.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tanz2 {

struct SymbolPair {
  int x = 0;
  int l = 0;
  bool at_infinity = false;

  static SymbolPair infinity() { return {0, 0, true}; }
  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
};

struct Itinerary {
  std::vector<SymbolPair> symbols;
  bool terminated = false;

  size_t size() const { return symbols.size(); }
  friend bool operator==(const Itinerary&, const Itinerary&) = default;
};

std::string to_string(const SymbolPair& s);
std::string to_string(const Itinerary& t);

Itinerary shift(const Itinerary& t);

double distance_kappa(const Itinerary& s, const Itinerary& t, double kappa);

// 1..4 counterclockwise from the (+,+) quadrant, axis ties to the positive side
template <class R>
int quadrant_label(const Point<R>& z);

// +1 when a preimage carrying this label needs Im(z/lambda) > 0 for its image
inline int image_side(int label) { return (label == 1 || label == 3) ? 1 : -1; }

template <class R>
Itinerary itinerary_of(const Param<R>& p, const Point<R>& z, int depth);

template <class R>
struct CylinderPoint {
  Point<R> point;
  double radius = 0;  // sampled bound, zero for pre-poles
};

template <class R>
CylinderPoint<R> point_from_itinerary(const Param<R>& p, const Itinerary& t, int depth);

// Boundary probes for cylinder sizes. The probe domain is the half disk
// {|z| < radius, s*Im(z/lambda) > 0} minus a disk of radius `disk` about
// s*lambda*i and minus the ray above it, so that every inverse branch is
// continuous on it; `offset` keeps probes off the cut lines.
struct ProbeSpec {
  double radius = 3.0;
  double disk = 0.1;
  double offset = 1e-9;
  int points = 160;
};

std::vector<Complex<double>> probe_contour(const Parameter& p, int side, const ProbeSpec& spec);

// stage-0 images of the probes for the first `depth` symbols of an unterminated word
std::vector<Complex<double>> cylinder_samples(const Parameter& p, const Itinerary& word, int depth,
                                              const ProbeSpec& spec);

// admissible unterminated word with the given regions: labels read off the
// nested images of a probe on the chosen side
Itinerary word_from_regions(const Parameter& p, const std::vector<int>& regions, int side);

struct WordReport {
  Itinerary word;
  std::vector<double> diameters;      // pooled over deeper samples, index d-1
  std::vector<double> raw_diameters;  // this depth's samples only
  bool strictly_decreasing = false;
};

struct CantorReport {
  Complex<double> lambda;
  double kappa = 2;
  int depth = 0;
  ProbeSpec probes;
  std::uint64_t seed = 0;
  std::vector<WordReport> words;
  int decreasing_words = 0;
  double max_final_diameter = 0;
  double min_separation = 0;  // between cylinder samples of distinct words at full depth
  int conjugacy_checked = 0;
  int conjugacy_passed = 0;
  double min_word_distance = 0;  // d_kappa between distinct sampled words
};

CantorReport cantor_diagnostics(const Parameter& p, int sample_words, int depth, double kappa = 2.0,
                                std::uint64_t seed = 1, const ProbeSpec& probes = {});

// exact symbol agreement of itinerary_of(eval z) with shift(itinerary_of z)
bool conjugacy_holds(const Param<quad>& p, const Point<quad>& z, int depth);

}  // namespace tanz2
