#include "qrmat/json_io.hpp"

namespace qrmat {

Json to_json(const QLaurent& x) {
    Json j = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Rational num = c;
        j.push_back(Json::array({k, num.get_num().get_str(), num.get_den().get_str()}));
    }
    return j;
}

QLaurent qlaurent_from_json(const Json& j) {
    QLaurent x;
    for (const auto& term : j) {
        int k = term.at(0).get<int>();
        Rational c(term.at(1).get<std::string>() + "/" + term.at(2).get<std::string>());
        c.canonicalize();
        x.add_term(k, c);
    }
    return x;
}

Json to_json(const QRat& x) { return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

QRat qrat_from_json(const Json& j) {
    return QRat(qlaurent_from_json(j.at("num")), qlaurent_from_json(j.at("den")));
}

Json to_json(const ZPoly& x) {
    Json j = Json::array();
    for (int k = 0; k <= x.degree(); ++k) j.push_back(to_json(x.coeff(k)));
    return j;
}

ZPoly zpoly_from_json(const Json& j) {
    std::vector<QRat> coeffs;
    for (const auto& c : j) coeffs.push_back(qrat_from_json(c));
    return ZPoly(std::move(coeffs));
}

Json to_json(const ZRat& x) { return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

ZRat zrat_from_json(const Json& j) {
    return ZRat(zpoly_from_json(j.at("num")), zpoly_from_json(j.at("den")));
}

Json coeff_to_json(const Rational& x) {
    return Json::array({x.get_num().get_str(), x.get_den().get_str()});
}

std::string coeff_to_string(const Rational& x) { return rational_str(x); }

Json to_json(const SuperData& sd) {
    Json j;
    j["family"] = sd.family == Family::Osp ? "osp" : "glA";
    j["m"] = sd.m;
    j["n"] = sd.n;
    j["parity"] = sd.parity;
    j["theta"] = sd.theta;
    return j;
}

Json to_json(const Check& c) {
    Json j;
    j["id"] = c.id;
    j["rule"] = c.rule;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) j["residual"] = c.residual;
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["instance"] = r.instance;
    j["suite"] = r.suite;
    j["seconds"] = r.seconds;
    j["pass"] = r.all_pass();
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace qrmat
