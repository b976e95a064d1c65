#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rrg {

struct ThinningRow {
  int d = 0;
  int dhat = 0;
  double alpha = 0.0;
  double deleted = 0.0;
  double alpha_thin = 0.0;
};

/// Density left after pruning a Markovian independent set of density alpha
/// until every outside vertex has at most dhat neighbours inside:
///   deleted = (1 - alpha) sum_{l > dhat} (l - dhat) C(d,l) (1-p)^l p^{d-l}.
class ThinningCalculator {
 public:
  ThinningCalculator(int d, double alpha);

  ThinningRow row(int dhat) const;

  int degree() const noexcept { return d_; }
  double alpha() const noexcept { return alpha_; }

 private:
  int d_;
  double alpha_;
  std::vector<double> pmf_;  // Bin(d, 1-p) masses; trailing underflowed terms dropped
};

/// Single row; requires 1 <= dhat < d.
ThinningRow alpha_thin(int d, double alpha, int dhat);

std::vector<ThinningRow> thinning_table(int d, double alpha, int dhat_min, int dhat_max);

enum class StarStatus { DensityMet, DensityNotMet };

std::string_view to_string(StarStatus status);

/// Conditions (iii) and (iv) of the star-decomposition criterion concern
/// edge densities of induced subgraphs and are not checked here.
inline constexpr std::string_view kExternalConditionsNote =
    "edge-density conditions (iii)/(iv) unchecked; verify externally";

struct StarFeasibility {
  int d = 0;
  int k = 0;
  double alpha_req = 0.0;  // 1 - d / (2k)
  std::optional<int> dhat_min;
  std::optional<double> alpha_thin;  // at dhat_min
  StarStatus status = StarStatus::DensityNotMet;
  std::string_view external_conditions_note = kExternalConditionsNote;
};

/// One row for every k with d/2 < k < d; dhat_min is the smallest dhat < k
/// whose thinned density reaches 1 - d/(2k).
std::vector<StarFeasibility> star_candidates(int d, double alpha);

/// floor(d / (2 (1 - alpha_upper))): largest k compatible with an upper bound
/// on the independence ratio.
int necessary_bound_k(int d, double alpha_upper);

/// Static table of published independence-ratio upper bounds, keyed by degree.
class UpperBoundTable {
 public:
  /// CSV with header `degree,upper_bound`; lines starting with '#' are comments.
  static UpperBoundTable parse(std::istream& in);
  static UpperBoundTable load(const std::string& path);

  std::optional<double> lookup(int d) const;
  const std::string& version() const noexcept { return version_; }
  std::size_t size() const noexcept { return bounds_.size(); }

 private:
  std::map<int, double> bounds_;
  std::string version_;
};

}  // namespace rrg
