#include "rdiag/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "rdiag/json_io.hpp"

namespace rdiag {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), end);
}

namespace {

void dump_into(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ", ";
        first = false;
        out += Json(key).dump();
        out += ": ";
        dump_into(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ", ";
        first = false;
        dump_into(item, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double d = value.get<double>();
      // JSON has no inf/nan; emit null the way nlohmann does.
      out += std::isfinite(d) ? format_double(d) : "null";
      break;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

std::string dump(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

}  // namespace rdiag
