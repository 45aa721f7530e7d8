#include "gkp/io.hpp"

#include <sstream>

#include "gkp/errors.hpp"
#include "gkp/factorials.hpp"

#include <json.hpp>

namespace gkp {

Normalization Normalization::parse(const std::string& text, bool abs_flag) {
    Normalization n;
    n.abs = abs_flag;
    if (text.empty() || text == "none") {
        n.kind = Kind::none;
    } else if (text == "factorial") {
        n.kind = Kind::factorial;
    } else if (text.rfind("rising:", 0) == 0) {
        n.kind = Kind::rising;
        n.c = Rat::parse(text.substr(7));
    } else {
        throw DomainError("unknown normalization '" + text +
                          "' (expected none, factorial or rising:<c>)");
    }
    return n;
}

Rat Normalization::apply(const Rat& value, long n) const {
    Rat v = value;
    switch (kind) {
    case Kind::none:
        break;
    case Kind::factorial:
        v /= factorial(n);
        break;
    case Kind::rising: {
        Rat divisor = rising(c, n);
        if (divisor.is_zero())
            throw DomainError("normalization divisor (rising factorial) vanishes at row " +
                              std::to_string(n));
        v /= divisor;
        break;
    }
    }
    return abs ? v.abs() : v;
}

GkpParams parse_params(const std::string& text) {
    std::vector<Rat> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (piece.empty())
            throw DomainError("empty entry in parameter list '" + text + "'");
        vals.push_back(Rat::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vals.size() != 6)
        throw DomainError("expected six comma-separated rationals a,b,g,a',b',g', got " +
                          std::to_string(vals.size()));
    return GkpParams{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
}

std::string triangle_to_csv(const Triangle& tri, const Normalization& norm) {
    std::ostringstream os;
    for (long n = 0; n <= tri.max_n(); ++n) {
        for (long k = 0; k <= n; ++k) {
            if (k > 0) os << ',';
            os << norm.apply(tri.entry(n, k), n).str();
        }
        os << '\n';
    }
    return os.str();
}

std::string triangle_to_json(const Triangle& tri, const Normalization& norm) {
    nlohmann::ordered_json doc;
    const GkpParams& p = tri.params();
    doc["params"] = {p.alpha.str(),  p.beta.str(),  p.gamma.str(),
                     p.alphaP.str(), p.betaP.str(), p.gammaP.str()};
    doc["n"] = tri.max_n();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long n = 0; n <= tri.max_n(); ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (long k = 0; k <= n; ++k) row.push_back(norm.apply(tri.entry(n, k), n).str());
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string triangle_to_bfile(const Triangle& tri, const Normalization& norm) {
    std::ostringstream os;
    long index = 0;
    for (long n = 0; n <= tri.max_n(); ++n)
        for (long k = 0; k <= n; ++k)
            os << index++ << ' ' << norm.apply(tri.entry(n, k), n).str() << '\n';
    return os.str();
}

std::string triangle_to_format(const Triangle& tri, const std::string& format,
                               const Normalization& norm) {
    if (format == "csv") return triangle_to_csv(tri, norm);
    if (format == "json") return triangle_to_json(tri, norm);
    if (format == "bfile") return triangle_to_bfile(tri, norm);
    throw DomainError("unknown format '" + format + "' (expected csv, json or bfile)");
}

std::vector<std::vector<Rat>> rows_from_csv(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<Rat> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            std::string piece =
                line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            row.push_back(Rat::parse(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Triangle triangle_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    const auto& pj = doc.at("params");
    if (!pj.is_array() || pj.size() != 6)
        throw DomainError("triangle JSON needs a six-entry params array");
    GkpParams p{Rat::parse(pj[0].get<std::string>()), Rat::parse(pj[1].get<std::string>()),
                Rat::parse(pj[2].get<std::string>()), Rat::parse(pj[3].get<std::string>()),
                Rat::parse(pj[4].get<std::string>()), Rat::parse(pj[5].get<std::string>())};
    std::vector<std::vector<Rat>> rows;
    for (const auto& rj : doc.at("rows")) {
        std::vector<Rat> row;
        for (const auto& v : rj) row.push_back(Rat::parse(v.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return Triangle(p, std::move(rows));
}

} // namespace gkp
