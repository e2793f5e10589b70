#pragma once

#include <string>

#include "qrmat/exactring.hpp"
#include "qrmat/gradedmatrix.hpp"
#include "qrmat/report.hpp"
#include "qrmat/superdata.hpp"

#include "json.hpp"

namespace qrmat {

using Json = nlohmann::json;

/// Sorted [exponent, numerator, denominator] triples.
Json to_json(const QLaurent& x);
QLaurent qlaurent_from_json(const Json& j);

Json to_json(const QRat& x);
QRat qrat_from_json(const Json& j);

Json to_json(const ZPoly& x);
ZPoly zpoly_from_json(const Json& j);

Json to_json(const ZRat& x);
ZRat zrat_from_json(const Json& j);

Json to_json(const SuperData& sd);

// Coefficient serialization, one overload per supported entry ring.
Json coeff_to_json(const Rational& x);
inline Json coeff_to_json(const QLaurent& x) { return to_json(x); }
inline Json coeff_to_json(const QRat& x) { return to_json(x); }
inline Json coeff_to_json(const ZRat& x) { return to_json(x); }
std::string coeff_to_string(const Rational& x);
inline std::string coeff_to_string(const QLaurent& x) { return x.str(); }
inline std::string coeff_to_string(const QRat& x) { return x.str(); }
inline std::string coeff_to_string(const ZRat& x) { return x.str(); }

/// {dim, space, entries: [{r, c, coeff}]} with 1-based row-major composite
/// indices.
template <typename T>
Json matrix_to_json(const GradedMatrix<T>& m) {
    Json j;
    j["dim"] = m.dim();
    j["space"] = m.legs() == 1 ? "V" : (m.legs() == 2 ? "VxV" : "VxVxV");
    j["data"] = to_json(m.sd());
    Json entries = Json::array();
    for (const auto& [r, row] : m.rows())
        for (const auto& [c, v] : row)
            entries.push_back(Json{{"r", r + 1}, {"c", c + 1}, {"coeff", coeff_to_json(v)}});
    j["entries"] = std::move(entries);
    return j;
}

template <typename T, typename F>
GradedMatrix<T> matrix_from_json(const Json& j, const SuperData& sd, int legs, F&& coeff_parse) {
    GradedMatrix<T> m(sd, legs);
    for (const auto& e : j.at("entries"))
        m.add(e.at("r").get<int>() - 1, e.at("c").get<int>() - 1, coeff_parse(e.at("coeff")));
    return m;
}

/// Dense CSV of the matrix entries (human-readable coefficients).
template <typename T>
std::string matrix_to_csv(const GradedMatrix<T>& m) {
    std::string out;
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            if (c) out += ",";
            out += "\"" + coeff_to_string(m.at(r, c)) + "\"";
        }
        out += "\n";
    }
    return out;
}

Json to_json(const Check& c);
Json to_json(const Report& r);

}  // namespace qrmat
