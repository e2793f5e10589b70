#include "qrmat/instances.hpp"

#include <fstream>

namespace qrmat {

SuperData InstanceSpec::build() const {
    std::vector<int> par;
    for (char c : parity) {
        if (c != '0' && c != '1') throw BadInstance("parity string must be over {0,1}");
        par.push_back(c - '0');
    }
    std::vector<int> th;
    for (char c : theta) {
        if (c == '+')
            th.push_back(1);
        else if (c == '-')
            th.push_back(-1);
        else
            throw BadInstance("theta string must be over {+,-}");
    }
    return SuperData::build(family, m, n, par, th);
}

std::string InstanceSpec::label() const {
    std::string l = (family == Family::Osp ? "osp(" : "gl(") + std::to_string(m) + "|" +
                    std::to_string(n) + ") parity=" + parity;
    if (!theta.empty()) l += " theta=" + theta;
    return l;
}

InstanceSpec InstanceSpec::from_json(const Json& j) {
    InstanceSpec s;
    std::string fam = j.at("family").get<std::string>();
    if (fam == "osp")
        s.family = Family::Osp;
    else if (fam == "glA" || fam == "gl")
        s.family = Family::GlA;
    else
        throw BadInstance("unknown family " + fam);
    s.m = j.at("m").get<int>();
    s.n = j.at("n").get<int>();
    s.parity = j.at("parity").get<std::string>();
    if (j.contains("theta")) s.theta = j.at("theta").get<std::string>();
    if (j.contains("eval_q")) s.eval_q = parse_rational(j.at("eval_q").get<std::string>());
    return s;
}

Json InstanceSpec::to_json() const {
    Json j;
    j["family"] = family == Family::Osp ? "osp" : "glA";
    j["m"] = m;
    j["n"] = n;
    j["parity"] = parity;
    if (!theta.empty()) j["theta"] = theta;
    if (eval_q) j["eval_q"] = rational_str(*eval_q);
    return j;
}

std::vector<InstanceSpec> default_instances() {
    std::vector<InstanceSpec> out;
    auto push_all = [&](Family fam, int m, int n) {
        for (const auto& p : admissible_parities(fam, m, n)) {
            InstanceSpec s;
            s.family = fam;
            s.m = m;
            s.n = n;
            for (int b : p) s.parity += static_cast<char>('0' + b);
            out.push_back(std::move(s));
        }
    };
    for (auto [m, n] : std::vector<std::pair<int, int>>{
             {1, 2}, {3, 2}, {2, 2}, {4, 2}, {2, 4}, {1, 4}, {3, 4}, {5, 2}})
        push_all(Family::Osp, m, n);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}})
        push_all(Family::GlA, m, n);
    return out;
}

std::vector<InstanceSpec> load_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open batch file " + path);
    Json j;
    in >> j;
    std::vector<InstanceSpec> out;
    for (const auto& item : j.at("instances")) out.push_back(InstanceSpec::from_json(item));
    return out;
}

void write_default_batch(const std::string& path) {
    Json j;
    Json arr = Json::array();
    for (const auto& s : default_instances()) arr.push_back(s.to_json());
    j["instances"] = std::move(arr);
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

}  // namespace qrmat
