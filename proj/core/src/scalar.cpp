#include "symplex/scalar.hpp"

namespace symplex {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(const std::string& text_in) {
    std::string text = text_in;
    if (!text.empty() && text[0] == '+') text.erase(0, 1);  // GMP rejects a leading '+'
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(text);
            r.canonicalize();
            return r;
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational '" + text + "'");
    }
}

std::string Scalar::str() const {
    if (im == 0) return rational_str(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rational_str(im) + "i";
    if (re == 0) return imag;
    if (im > 0 && imag[0] != '-') return rational_str(re) + "+" + imag;
    return rational_str(re) + imag;
}

}  // namespace symplex
