#include "combilang/exact.hpp"

#include <stdexcept>

namespace combilang {

std::string to_pq(const Rational& x)
{
    return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_pq(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer in rational");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("malformed integer: " + std::string(s));
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed integer: " + std::string(s));
        return BigInt(std::string(s));
    };

    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    BigInt num = parse_int(trim(text.substr(0, slash)));
    BigInt den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational");
    return Rational(num, den);
}

std::string to_string(const BigInt& x) { return x.str(); }

BigInt pow2(unsigned e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

} // namespace combilang
