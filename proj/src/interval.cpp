#include "ivagg/interval.hpp"

#include <cstdio>
#include <cstdlib>

namespace ivagg {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string to_string(const Interval& x) {
    return "[" + format_double(x.lower()) + "," + format_double(x.upper()) + "]";
}

Interval parse_interval(const std::string& text) {
    std::size_t open = text.find('[');
    std::size_t comma = text.find(',');
    std::size_t close = text.find(']');
    if (open == std::string::npos || comma == std::string::npos ||
        close == std::string::npos || !(open < comma && comma < close))
        throw std::invalid_argument("malformed interval: '" + text + "'");
    auto num = [&](std::size_t from, std::size_t to) {
        std::string s = text.substr(from, to - from);
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        while (end && *end == ' ') ++end;
        if (!end || *end != '\0')
            throw std::invalid_argument("malformed interval bound: '" + s + "'");
        return v;
    };
    return Interval(num(open + 1, comma), num(comma + 1, close));
}

}  // namespace ivagg
