#include "f4rep/rational.hpp"

#include <stdexcept>

namespace f4rep
{

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer &z) { return z.get_str(); }

Rational parse_rational(const std::string &text)
{
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace f4rep
