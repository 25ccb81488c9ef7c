#include "theta/rational.hpp"

namespace theta {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw ParseError("floating-point literals are not accepted: " + s);
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string render_rational(const Rational& r) {
    return r.get_str();
}

mpz_class round_nearest(const Rational& r) {
    // floor(r + 1/2)
    Rational shifted = r + Rational(1, 2);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(),
               shifted.get_den().get_mpz_t());
    return q;
}

double to_double(const Rational& r) {
    return r.get_d();
}

}  // namespace theta
