#pragma once

#include <sstream>
#include <string>

namespace hmra {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3, kOff = 4 };

// Threshold comes from the HMRA2D_LOG environment variable
// (debug|info|warn|error|off); default is warn.
LogLevel log_threshold();
void log_message(LogLevel level, const std::string& message);

namespace detail {
template <class... Args>
std::string log_format(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

#define HMRA_LOG(level, ...)                                        \
  do {                                                              \
    if (static_cast<int>(level) >= static_cast<int>(::hmra::log_threshold())) \
      ::hmra::log_message(level, ::hmra::detail::log_format(__VA_ARGS__));    \
  } while (0)

#define HMRA_DEBUG(...) HMRA_LOG(::hmra::LogLevel::kDebug, __VA_ARGS__)
#define HMRA_INFO(...) HMRA_LOG(::hmra::LogLevel::kInfo, __VA_ARGS__)
#define HMRA_WARN(...) HMRA_LOG(::hmra::LogLevel::kWarn, __VA_ARGS__)
#define HMRA_ERROR(...) HMRA_LOG(::hmra::LogLevel::kError, __VA_ARGS__)

}  // namespace hmra
