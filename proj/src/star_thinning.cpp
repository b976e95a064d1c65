#include "rrg/star_thinning.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "rrg/augmentation.hpp"
#include "rrg/errors.hpp"

namespace rrg {
namespace {

// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ThinningCalculator::ThinningCalculator(int d, double alpha) : d_(d), alpha_(alpha) {
  if (d < 2) throw DomainError(fmt::format("thinning needs d >= 2, got {}", d));
  const double p = conditional_p(alpha);
  const double q = 1.0 - p;  // P(neighbour is 1 | vertex is 0)
  const double log_p = std::log1p(-alpha / (1.0 - alpha));
  const double log_q = q > 0.0 ? std::log(q) : -INFINITY;
  const double lg_d = std::lgamma(d + 1.0);

  pmf_.resize(static_cast<std::size_t>(d) + 1);
  for (int l = 0; l <= d; ++l) {
    const double log_choose = lg_d - std::lgamma(l + 1.0) - std::lgamma(d - l + 1.0);
    const double log_term = log_choose + (l > 0 ? l * log_q : 0.0) + (d - l) * log_p;
    pmf_[static_cast<std::size_t>(l)] = std::exp(log_term);
  }
  while (pmf_.size() > 1 && pmf_.back() == 0.0) pmf_.pop_back();
}

ThinningRow ThinningCalculator::row(int dhat) const {
  if (dhat < 1 || dhat >= d_) {
    throw DomainError(fmt::format("thinness cap {} outside [1, {})", dhat, d_));
  }
  CompensatedSum tail;
  for (std::size_t l = static_cast<std::size_t>(dhat) + 1; l < pmf_.size(); ++l) {
    tail.add((static_cast<double>(l) - dhat) * pmf_[l]);
  }
  ThinningRow r;
  r.d = d_;
  r.dhat = dhat;
  r.alpha = alpha_;
  r.deleted = (1.0 - alpha_) * tail.value();
  r.alpha_thin = alpha_ - r.deleted;
  return r;
}

ThinningRow alpha_thin(int d, double alpha, int dhat) {
  return ThinningCalculator(d, alpha).row(dhat);
}

std::vector<ThinningRow> thinning_table(int d, double alpha, int dhat_min, int dhat_max) {
  if (dhat_min > dhat_max) {
    throw DomainError(fmt::format("empty thinness range {}..{}", dhat_min, dhat_max));
  }
  const ThinningCalculator calc(d, alpha);
  std::vector<ThinningRow> rows;
  for (int dhat = dhat_min; dhat <= dhat_max; ++dhat) rows.push_back(calc.row(dhat));
  return rows;
}

std::string_view to_string(StarStatus status) {
  return status == StarStatus::DensityMet ? "density-met" : "density-not-met";
}

std::vector<StarFeasibility> star_candidates(int d, double alpha) {
  const ThinningCalculator calc(d, alpha);
  std::vector<StarFeasibility> out;

  // The required density grows with k and the thinned density is
  // nondecreasing in dhat, so the cap only ever moves forward.
  int dhat = 1;
  std::optional<double> thin_at_dhat;
  for (int k = d / 2 + 1; k < d; ++k) {
    StarFeasibility row;
    row.d = d;
    row.k = k;
    row.alpha_req = 1.0 - static_cast<double>(d) / (2.0 * k);
    while (dhat < k) {
      if (!thin_at_dhat) thin_at_dhat = calc.row(dhat).alpha_thin;
      if (*thin_at_dhat >= row.alpha_req) break;
      ++dhat;
      thin_at_dhat.reset();
    }
    if (dhat < k) {
      row.dhat_min = dhat;
      row.alpha_thin = thin_at_dhat;
      row.status = StarStatus::DensityMet;
    }
    out.push_back(row);
  }
  return out;
}

int necessary_bound_k(int d, double alpha_upper) {
  if (!(alpha_upper >= 0.0 && alpha_upper < 0.5)) {
    throw DomainError(fmt::format("upper bound {:.17g} outside [0, 1/2)", alpha_upper));
  }
  return static_cast<int>(std::floor(d / (2.0 * (1.0 - alpha_upper))));
}

UpperBoundTable UpperBoundTable::parse(std::istream& in) {
  UpperBoundTable table;
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kVersionTag = "# version:";
      if (line.rfind(kVersionTag, 0) == 0) table.version_ = trim(line.substr(kVersionTag.size()));
      continue;
    }
    if (!header_seen) {
      if (line != "degree,upper_bound") {
        throw DomainError(fmt::format("upper-bound table: unexpected header '{}'", line));
      }
      header_seen = true;
      continue;
    }
    std::istringstream fields(line);
    int degree = 0;
    char comma = 0;
    double bound = 0.0;
    if (!(fields >> degree >> comma >> bound) || comma != ',') {
      throw DomainError(fmt::format("upper-bound table: malformed line {}: '{}'", line_no, line));
    }
    table.bounds_[degree] = bound;
  }
  if (!header_seen) throw DomainError("upper-bound table: missing header");
  return table;
}

UpperBoundTable UpperBoundTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(fmt::format("cannot open upper-bound table '{}'", path));
  return parse(in);
}

std::optional<double> UpperBoundTable::lookup(int d) const {
  const auto it = bounds_.find(d);
  if (it == bounds_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rrg
