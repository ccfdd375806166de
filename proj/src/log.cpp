#include "hmra2d/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace hmra {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("HMRA2D_LOG");
  if (!env) return LogLevel::kWarn;
  std::string s(env);
  if (s == "debug") return LogLevel::kDebug;
  if (s == "info") return LogLevel::kInfo;
  if (s == "warn") return LogLevel::kWarn;
  if (s == "error") return LogLevel::kError;
  if (s == "off") return LogLevel::kOff;
  return LogLevel::kWarn;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::kDebug: return "debug";
    case LogLevel::kInfo: return "info";
    case LogLevel::kWarn: return "warn";
    case LogLevel::kError: return "error";
    default: return "?";
  }
}

std::mutex g_log_mutex;

}  // namespace

LogLevel log_threshold() {
  static const LogLevel level = parse_level();
  return level;
}

void log_message(LogLevel level, const std::string& message) {
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "[hmra2d " << level_name(level) << "] " << message << "\n";
}

}  // namespace hmra
