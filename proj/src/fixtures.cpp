#include "hvo/fixtures.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

#ifndef HVO_DATA_DIR
#define HVO_DATA_DIR "data"
#endif

namespace hvo {

std::string default_data_dir() { return HVO_DATA_DIR; }

QmfBasisElement parse_qmf_name(const std::string& s) {
    QmfBasisElement e;
    if (s == "1") return e;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find('*', pos);
        if (end == std::string::npos) end = s.size();
        const std::string f = s.substr(pos, end - pos);
        if (f.size() < 2 || f[0] != 'E') throw std::invalid_argument("bad basis name: " + s);
        const size_t caret = f.find('^');
        const int w = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const int p = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
        if (w == 2) e.a += p;
        else if (w == 4) e.b += p;
        else if (w == 6) e.c += p;
        else throw std::invalid_argument("bad basis name: " + s);
        pos = end + 1;
    }
    return e;
}

Fixtures load_fixtures(const std::string& data_dir) {
    const std::string path = data_dir + "/fixtures.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const nlohmann::json j = nlohmann::json::parse(in);
    Fixtures f;
    for (const auto& [name, entry] : j.at("weight5_series").items()) {
        std::vector<Rational> v;
        for (const auto& c : entry.at("coefficients")) v.push_back(parse_rational(c.get<std::string>()));
        f.weight5[name] = v;
    }
    f.dual_depth = j.at("dual_k2_m3").at("depth").get<int>();
    for (const auto& [k, c] : j.at("dual_k2_m3").at("nonzero").items())
        f.dual_k2_m3[std::stoi(k)] = parse_rational(c.get<std::string>());
    f.correlation_q2 = parse_mpoly(j.at("correlation_1_3").at("q2").get<std::string>());
    f.correlation_q3 = parse_mpoly(j.at("correlation_1_3").at("q3").get<std::string>());
    for (const auto& row : j.at("correlation_1_3_fit"))
        f.correlation_fit.emplace_back(parse_qmf_name(row.at(0).get<std::string>()),
                                       parse_mpoly(row.at(1).get<std::string>()));
    const auto& w = j.at("worked_example");
    f.worked.mu = Partition::parse(w.at("mu").get<std::string>());
    f.worked.lambda = Partition::parse(w.at("lambda").get<std::string>());
    f.worked.jack_mu = parse_fock(w.at("jack_mu").get<std::string>());
    f.worked.jack_lambda = parse_fock(w.at("jack_lambda").get<std::string>());
    f.worked.expansion_mu_printed = parse_fock(w.at("expansion_mu_printed").get<std::string>());
    f.worked.expansion_lambda_printed = parse_fock(w.at("expansion_lambda_printed").get<std::string>());
    f.worked.result = parse_mpoly(w.at("result").get<std::string>());
    return f;
}

} // namespace hvo
