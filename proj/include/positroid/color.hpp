#pragma once

#include <cstdint>
#include <string>

namespace positroid {

enum class Color : std::uint8_t { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
inline std::string to_string(Color c) { return c == Color::black ? "black" : "white"; }

}  // namespace positroid
