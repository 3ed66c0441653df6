#pragma once

#include "hvo/fock.hpp"
#include "hvo/mpoly.hpp"
#include "hvo/partitions.hpp"
#include "hvo/qseries.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hvo {

struct WorkedExample {
    Partition mu, lambda;
    FockElement jack_mu, jack_lambda;
    FockElement expansion_mu_printed, expansion_lambda_printed;
    MPoly result;
};

// Reference values shipped in data/fixtures.json.
struct Fixtures {
    std::map<std::string, std::vector<Rational>> weight5;  // E1, E2, E3 from q^0
    int dual_depth = 0;
    std::map<int, Rational> dual_k2_m3;                    // nonzero coefficients
    MPoly correlation_q2, correlation_q3;
    std::vector<std::pair<QmfBasisElement, MPoly>> correlation_fit;
    WorkedExample worked;
};

// Directory compiled in at build time.
std::string default_data_dir();
Fixtures load_fixtures(const std::string& data_dir);

// Inverse of QmfBasisElement::name().
QmfBasisElement parse_qmf_name(const std::string& s);

} // namespace hvo
