#include "lo/rational.hpp"

#include "lo/errors.hpp"

#include <sstream>

namespace lo {

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0)
            throw ParseError("rational with zero denominator: " + std::string(text));
        // Division canonicalizes; the raw mpq string constructor would not.
        return Rational(num) / Rational(den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational number: " + std::string(text));
    }
}

std::string to_string(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

} // namespace lo
