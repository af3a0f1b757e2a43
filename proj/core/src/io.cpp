// Copyright 2026 The qangle developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qangle/io.hpp"

#include <cmath>
#include <fstream>

namespace qangle::io {

namespace {

Complex pair_to_complex(const nlohmann::json &entry, const char *what) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
        throw std::invalid_argument(std::string(what) +
                                    ": each entry must be a [re, im] number pair");
    }
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::invalid_argument(std::string(what) + ": entries must be finite");
    }
    return Complex(re, im);
}

nlohmann::json complex_to_pair(Complex z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json parse_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path.string());
    }
    return nlohmann::json::parse(in);  // throws nlohmann::json::parse_error
}

void write_file(const std::filesystem::path &path, const nlohmann::json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write file: " + path.string());
    }
    out << j.dump(2) << '\n';
}

}  // namespace

StateVector state_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("state: expected a non-empty array of [re, im] pairs");
    }
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = pair_to_complex(j[i], "state");
    }
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > kStateNormWindow) {
        throw std::invalid_argument(
            "state: norm deviates from 1 by more than the accepted window");
    }
    return normalize(v);
}

nlohmann::json state_to_json(const StateVector &state) {
    nlohmann::json j = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.dim(); ++i) {
        j.push_back(complex_to_pair(state.amplitudes()(i)));
    }
    return j;
}

StateVector load_state(const std::filesystem::path &path) {
    return state_from_json(parse_file(path));
}

void save_state(const std::filesystem::path &path, const StateVector &state) {
    write_file(path, state_to_json(state));
}

HermitianGenerator generator_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw std::invalid_argument("generator: expected {\"dim\": n, \"entries\": [...]}");
    }
    if (!j["dim"].is_number_integer()) {
        throw std::invalid_argument("generator: dim must be an integer");
    }
    const auto dim = j["dim"].get<Eigen::Index>();
    if (dim < 1) {
        throw std::invalid_argument("generator: dim must be at least 1");
    }
    if (dim > kMaxGeneratorDim) {
        throw std::invalid_argument("generator: dim exceeds the supported maximum");
    }
    const nlohmann::json &entries = j["entries"];
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("generator: entries must hold dim*dim pairs, row-major");
    }
    CMatrix m(dim, dim);
    std::size_t idx = 0;
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = pair_to_complex(entries[idx++], "generator");
        }
    }
    return HermitianGenerator(std::move(m));
}

nlohmann::json generator_to_json(const CMatrix &matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1) {
        throw std::invalid_argument("generator_to_json: matrix must be square, non-empty");
    }
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
            entries.push_back(complex_to_pair(matrix(r, c)));
        }
    }
    return nlohmann::json{{"dim", matrix.rows()}, {"entries", std::move(entries)}};
}

HermitianGenerator load_generator(const std::filesystem::path &path) {
    return generator_from_json(parse_file(path));
}

void save_generator(const std::filesystem::path &path, const CMatrix &matrix) {
    write_file(path, generator_to_json(matrix));
}

nlohmann::ordered_json to_json(const BoundReport &report) {
    nlohmann::ordered_json j;
    j["context"] = report.context;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["slack"] = report.slack;
    j["tolerance"] = report.tolerance;
    j["holds"] = report.holds;
    return j;
}

}  // namespace qangle::io
