#include "specarb/rational.hpp"

#include <cctype>
#include <ostream>

namespace specarb {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw ParseError("malformed rational: '" + text + "'");
    }
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in rational: '" + text + "'");
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_rational(const BigRational& q) {
    // Fold the limbs of numerator and denominator; cheap and collision-light
    // for the sizes that show up here.
    auto fold = [](const mpz_class& z, std::size_t seed) {
        std::size_t h = seed;
        const mpz_srcptr p = z.get_mpz_t();
        int n = std::abs(p->_mp_size);
        for (int k = 0; k < n; ++k) {
            h = h * 1099511628211ULL + static_cast<std::size_t>(p->_mp_d[k]);
        }
        if (p->_mp_size < 0) h = ~h;
        return h;
    };
    return fold(q.get_den(), fold(q.get_num(), 14695981039346656037ULL));
}

std::string format_gaussian(const GaussianRational& z) {
    if (z.im == 0) return format_rational(z.re);
    std::string imag = format_rational(z.im) + "i";
    if (z.re == 0) return imag;
    if (z.im > 0) return format_rational(z.re) + "+" + imag;
    return format_rational(z.re) + imag;  // imag already carries the '-'
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_gaussian(z);
}

}  // namespace specarb
