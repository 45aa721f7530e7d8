#include "gkp/rational.hpp"

#include <ostream>

namespace gkp {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rat(n);
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw DomainError("rational literal with zero denominator: " + text);
        mpq_class q(n, d);
        q.canonicalize();
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow_int(const Rat& base, long e) {
    if (e < 0) return pow_int(base.reciprocal(), -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

} // namespace gkp
