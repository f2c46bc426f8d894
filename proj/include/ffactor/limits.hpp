#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ffactor {

/// Raised when an exponential routine is asked to run beyond its size cap.
class SizeCapError : public std::runtime_error {
 public:
  SizeCapError(std::string cap, long limit, long actual)
      : std::runtime_error(cap + " exceeded: instance has " + std::to_string(actual) + ", cap is " +
                           std::to_string(limit) + " (raise the cap or pass --force)"),
        cap_(std::move(cap)),
        limit_(limit),
        actual_(actual) {}

  const std::string& cap() const { return cap_; }
  long limit() const { return limit_; }
  long actual() const { return actual_; }

 private:
  std::string cap_;
  long limit_;
  long actual_;
};

/// Size caps for the exponential routines.
struct Limits {
  int exact_audit_max_n = 15;  // 3^n violating-pair enumeration
  int toughness_max_n = 20;    // 2^n cutset enumeration
  int brute_max_m = 24;        // 2^m edge-subset oracles

  /// Defaults, overridden by FFACTOR_EXACT_MAX_N, FFACTOR_TOUGHNESS_MAX_N and
  /// FFACTOR_BRUTE_MAX_M when set.
  static Limits from_environment() {
    Limits lim;
    read_env("FFACTOR_EXACT_MAX_N", lim.exact_audit_max_n);
    read_env("FFACTOR_TOUGHNESS_MAX_N", lim.toughness_max_n);
    read_env("FFACTOR_BRUTE_MAX_M", lim.brute_max_m);
    return lim;
  }

  static Limits unlimited() { return Limits{1 << 30, 1 << 30, 62}; }

 private:
  static void read_env(const char* name, int& slot) {
    if (const char* raw = std::getenv(name); raw != nullptr && *raw != '\0') {
      try {
        slot = std::stoi(raw);
      } catch (const std::logic_error&) {
        throw std::invalid_argument(std::string("environment variable ") + name + " is not an integer");
      }
    }
  }
};

}  // namespace ffactor
