#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabledm {

// Raised when a numerical routine cannot meet its accuracy target.  Carries
// the error bound that was actually achieved.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved bound " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested time lies beyond the accumulated Lamperti clock of a finite path.
class horizon_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stability index alpha in (0,2].  The pure-jump regime is alpha < 2;
// alpha = 2 is admitted only to validate against Gaussian closed forms.
class StabilityIndex {
 public:
  explicit StabilityIndex(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
      throw std::domain_error("StabilityIndex: alpha must lie in (0,2]");
  }
  double alpha() const { return alpha_; }
  bool pure_jump() const { return alpha_ < 2.0; }

 private:
  double alpha_;
};

// Argument triple of a transition density evaluation.  t must be strictly
// positive; half-line kernels additionally require x,y >= 0 (checked per
// operation).
struct KernelQuery {
  double t;
  double x;
  double y;
};

// Interval [0,a] with an image-sum truncation order.
struct IntervalSpec {
  double a;
  int n_images;

  IntervalSpec(double a_, int n_images_) : a(a_), n_images(n_images_) {
    if (!(a > 0.0)) throw std::domain_error("IntervalSpec: a must be > 0");
    if (n_images < 1) throw std::domain_error("IntervalSpec: n_images must be >= 1");
  }
};

// Point in the interior of the Weyl chamber x_1 > x_2 > ... > x_n.
class ChamberPoint {
 public:
  explicit ChamberPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::domain_error("ChamberPoint: empty coordinate vector");
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (!(coords_[i - 1] > coords_[i]))
        throw std::domain_error("ChamberPoint: coordinates must be strictly decreasing");
  }
  const std::vector<double>& coords() const { return coords_; }
  std::size_t n() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

// Principal-value quadrature policy: symmetric excision of half-width
// `excision` around the singularity, Gauss panels of `grid_points` nodes,
// and Richardson (polynomial) extrapolation over `richardson_levels`
// halvings of the excision.
struct PvConfig {
  double excision = 1e-3;
  int grid_points = 16;
  int richardson_levels = 4;
};

// Policy for inverting exp(-|theta|^alpha t).  cutoff = 0 selects the
// automatic truncation point where the integrand tail drops below 1e-16.
struct FourierInversionConfig {
  double cutoff = 0.0;
  int nodes = 12;
};

// Seed plus stream id; identical pairs reproduce identical sample
// sequences, distinct stream ids give independent streams.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

// A path on a strictly increasing time grid.
struct PathSample {
  std::vector<double> times;
  std::vector<double> values;

  void validate() const {
    if (times.size() != values.size())
      throw std::domain_error("PathSample: times/values length mismatch");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (!(times[i] > times[i - 1]))
        throw std::domain_error("PathSample: times must be strictly increasing");
  }
};

struct LampertiSimConfig {
  double jump_cutoff = 1e-3;  // epsilon below which jumps are replaced by diffusion
  double horizon = 10.0;
  double step = 1e-3;

  void validate() const {
    if (!(jump_cutoff > 0.0) || !(jump_cutoff < 0.5))
      throw config_error("LampertiSimConfig: jump_cutoff must lie in (0, 0.5)");
    if (!(step > 0.0) || !(step < horizon))
      throw config_error("LampertiSimConfig: need 0 < step < horizon");
  }
};

// Result of one named check.  For one-sided checks passed <=> statistic <= reference.
struct TestReport {
  std::string name;
  double statistic = 0.0;
  double reference = 0.0;
  bool passed = false;
  std::map<std::string, std::string> meta;
};

inline TestReport make_report(std::string name, double statistic, double reference,
                              std::map<std::string, std::string> meta = {}) {
  TestReport r;
  r.name = std::move(name);
  r.statistic = statistic;
  r.reference = reference;
  r.passed = statistic <= reference;
  r.meta = std::move(meta);
  return r;
}

}  // namespace stabledm
