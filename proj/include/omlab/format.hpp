#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace omlab {

// locale-independent %.{digits}g rendering, '.' decimal point guaranteed
inline std::string fmt_g(double v, int digits = 10) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

} // namespace omlab
