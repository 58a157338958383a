#ifndef PDGTD_ERRORS_HPP
#define PDGTD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdgtd {

// Error taxonomy: configuration problems are user-facing and name the
// offending key/field; mesh/geometry errors name the element or face;
// BlowUpError carries the simulation time at which the state went non-finite.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

struct MeshError : std::runtime_error {
  explicit MeshError(const std::string& msg) : std::runtime_error("mesh error: " + msg) {}
};

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& msg) : std::runtime_error("geometry error: " + msg) {}
};

struct MaterialError : std::runtime_error {
  explicit MaterialError(const std::string& msg) : std::runtime_error("material error: " + msg) {}
};

struct NumericsError : std::runtime_error {
  explicit NumericsError(const std::string& msg) : std::runtime_error("numerics error: " + msg) {}
};

struct BlowUpError : std::runtime_error {
  double t_blowup;
  long step;
  BlowUpError(double t, long n)
      : std::runtime_error("solution blow-up at t=" + std::to_string(t) + " s (step " +
                           std::to_string(n) + ")"),
        t_blowup(t), step(n) {}
};

}  // namespace pdgtd

#endif
