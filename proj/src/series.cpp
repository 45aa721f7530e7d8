#include "gkp/series.hpp"

namespace gkp {

SeriesP reduce_to_poly_series(const SeriesF& s) {
    std::vector<Poly> c;
    c.reserve(s.order());
    for (long i = 0; i < s.order(); ++i) {
        const RatFunc& f = s.coeff(i);
        if (!f.is_poly())
            throw InternalCheckError("series coefficient of z^" + std::to_string(i) +
                                     " kept a denominator: " + f.str());
        c.push_back(f.num());
    }
    return SeriesP(s.order(), std::move(c));
}

} // namespace gkp
