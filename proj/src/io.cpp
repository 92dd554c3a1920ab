#include "xxnet/io.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <cstdio>
#include <numeric>

#include "xxnet/errors.hpp"

namespace xxnet {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_shortest(double x) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    return format_g17(x);
}

ParsedRational parse_rational(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational");
    const auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> long long {
        if (s.empty()) throw ValidationError("malformed rational");
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ValidationError("malformed rational: " + s);
        return v;
    };
    ParsedRational r;
    if (slash != std::string::npos) {
        r.num = parse_int(text.substr(0, slash));
        r.den = parse_int(text.substr(slash + 1));
        if (r.den == 0) throw ValidationError("rational with zero denominator");
    } else {
        // decimal form: digits[.digits]
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            r.num = parse_int(text);
            r.den = 1;
        } else {
            const std::string head = text.substr(0, dot);
            const std::string frac = text.substr(dot + 1);
            if (frac.empty()) throw ValidationError("malformed rational: " + text);
            for (char c : frac)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ValidationError("malformed rational: " + text);
            if (frac.size() > 17) throw ValidationError("rational with too many decimal digits");
            long long scale = 1;
            for (std::size_t t = 0; t < frac.size(); ++t) scale *= 10;
            const bool negative = !head.empty() && head[0] == '-';
            const long long whole = head.empty() || head == "-" ? 0 : parse_int(head);
            const long long fpart = parse_int(frac);
            r.num = whole * scale + (negative ? -fpart : whole < 0 ? -fpart : fpart);
            r.den = scale;
        }
    }
    if (r.den < 0) {
        r.den = -r.den;
        r.num = -r.num;
    }
    const long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

}  // namespace xxnet
