#include "beamnet/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "beamnet/geometry.hpp"

namespace beamnet {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw std::invalid_argument("config: bad value for " + key + ": " + value);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size() || (!value.empty() && value[0] == '-'))
    bad_value(key, value);
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    bad_value(key, value);
  }
  if (pos != value.size()) bad_value(key, value);
  return v;
}

[[noreturn]] void fail(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: " + key + " " + why);
}

}  // namespace

int WorldConfig::sweep_steps() const {
  return static_cast<int>(std::lround(kTau / sweep_step));
}

void WorldConfig::validate() const {
  if (n == 0) fail("n", "must be at least 1");
  if (!(field_size > 0.0)) fail("field_size", "must be positive");
  if (!(radio_range > 0.0)) fail("radio_range", "must be positive");
  if (gradient < 1) fail("gradient", "must be at least 1");
  if (!(alpha >= 1.0)) fail("alpha", "must be at least 1");
  if (elements_min < 1) fail("elements_min", "must be at least 1");
  if (elements_max < elements_min)
    fail("elements_max", "must be >= elements_min");
  if (!(epsilon > 0.0)) fail("epsilon", "must be positive");
  if (!(delta > 0.0)) fail("delta", "must be positive");
  if (!(sweep_step > 0.0) || sweep_step > kTau)
    fail("sweep_step", "must be in (0, tau]");
  const int steps = sweep_steps();
  if (steps < 1 || std::fabs(steps * sweep_step - kTau) > 1e-6)
    fail("sweep_step", "must divide a full circle");
}

std::string WorldConfig::to_key_values() const {
  std::ostringstream out;
  out << "n = " << n << '\n';
  out << "field_size = " << format_double(field_size) << '\n';
  out << "radio_range = " << format_double(radio_range) << '\n';
  out << "gradient = " << gradient << '\n';
  out << "alpha = " << format_double(alpha) << '\n';
  out << "elements_min = " << elements_min << '\n';
  out << "elements_max = " << elements_max << '\n';
  out << "epsilon = " << format_double(epsilon) << '\n';
  out << "delta = " << format_double(delta) << '\n';
  out << "sweep_step = " << format_double(sweep_step) << '\n';
  out << "seed = " << seed << '\n';
  return out.str();
}

bool WorldConfig::apply_key_value(const std::string& line) {
  const std::string body = trim(line.substr(0, line.find('#')));
  if (body.empty()) return false;
  const std::size_t eq = body.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("config: expected key = value, got: " + line);
  const std::string key = trim(body.substr(0, eq));
  const std::string value = trim(body.substr(eq + 1));
  if (key == "n") {
    const std::uint64_t v = parse_u64(key, value);
    if (v > 0xFFFFFFFFull) bad_value(key, value);
    n = static_cast<std::uint32_t>(v);
  } else if (key == "field_size") {
    field_size = parse_double(key, value);
  } else if (key == "radio_range") {
    radio_range = parse_double(key, value);
  } else if (key == "gradient") {
    gradient = parse_int(key, value);
  } else if (key == "alpha") {
    alpha = parse_double(key, value);
  } else if (key == "elements_min") {
    elements_min = parse_int(key, value);
  } else if (key == "elements_max") {
    elements_max = parse_int(key, value);
  } else if (key == "epsilon") {
    epsilon = parse_double(key, value);
  } else if (key == "delta") {
    delta = parse_double(key, value);
  } else if (key == "sweep_step") {
    sweep_step = parse_double(key, value);
  } else if (key == "seed") {
    seed = parse_u64(key, value);
  } else {
    throw std::invalid_argument("config: unknown key: " + key);
  }
  return true;
}

WorldConfig WorldConfig::from_stream(std::istream& in) {
  WorldConfig cfg;
  std::string line;
  while (std::getline(in, line)) cfg.apply_key_value(line);
  return cfg;
}

}  // namespace beamnet
