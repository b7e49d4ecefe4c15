#pragma once

#include <stdexcept>
#include <string>

namespace nlsw {

struct InvalidField : std::runtime_error {
  explicit InvalidField(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSpectrum : std::runtime_error {
  explicit InvalidSpectrum(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooLarge : std::runtime_error {
  explicit GridTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct KMaxTooLarge : std::runtime_error {
  explicit KMaxTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct DeltaTooSmall : std::runtime_error {
  explicit DeltaTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NonFinite : std::runtime_error {
  explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};

struct SmallnessViolated : std::runtime_error {
  explicit SmallnessViolated(const std::string& what) : std::runtime_error(what) {}
};

struct BandOutOfRange : std::runtime_error {
  explicit BandOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewPoints : std::runtime_error {
  explicit TooFewPoints(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySeries : std::runtime_error {
  explicit EmptySeries(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlsw
