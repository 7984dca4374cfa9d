#include "profilekit/rational.hpp"

#include <cctype>

namespace profilekit {

Rational Rational::parse(const std::string & text)
{
    if (text.empty())
        throw InputError("empty rational literal");
    auto parse_ll = [](const std::string & s) {
        if (s.empty() || (s.size() == 1 && (s[0] == '+' || s[0] == '-')))
            throw InputError("bad integer literal '" + s + "'");
        try {
            std::size_t pos = 0;
            long long value = std::stoll(s, &pos);
            if (pos != s.size())
                throw InputError("bad integer literal '" + s + "'");
            return value;
        }
        catch (const InputError &) {
            throw;
        }
        catch (const std::exception &) {
            throw InputError("bad integer literal '" + s + "'");
        }
    };

    auto slash = text.find('/');
    if (slash != std::string::npos)
        return {parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1))};

    auto dot = text.find('.');
    if (dot == std::string::npos)
        return {parse_ll(text), 1};

    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty())
        throw InputError("bad decimal literal '" + text + "'");
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("bad decimal literal '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty())
        head += "0";
    long long whole = parse_ll(head);
    long long den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (den > std::numeric_limits<long long>::max() / 10)
            throw InputError("decimal literal '" + text + "' has too many digits");
        den *= 10;
    }
    long long frac = tail.empty() ? 0 : parse_ll(tail);
    long long num = whole * den + (negative ? -frac : frac);
    return {num, den};
}

} // namespace profilekit
