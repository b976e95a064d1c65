#include "rrg/errors.hpp"

#include <fmt/format.h>

namespace rrg {

GwSupercritical::GwSupercritical(int degree, double offspring_mean)
    : std::runtime_error(fmt::format(
          "full-zero branching process is supercritical at d={} (offspring mean {:.12g} > 1)",
          degree, offspring_mean)),
      degree_(degree),
      offspring_mean_(offspring_mean) {}

}  // namespace rrg
