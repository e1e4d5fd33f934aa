// Copyright 2026 The pwlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pwlab/json_io.hpp"

#include <cmath>
#include <string>

namespace pwlab {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::InvalidArgument, "complex entry must be [re, im]");
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw Error(ErrorKind::InvalidArgument, "non-finite matrix entry");
    return {re, im};
}

}  // namespace

Json matrix_to_json(const Matrix &m) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_to_json(m(i, j)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json &j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const Json &entries = j.at("entries");
    if (rows < 1 || cols < 1) throw Error(ErrorKind::BadDimension, "matrix dimensions must be positive");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw Error(ErrorKind::DimensionMismatch, "entries length must equal rows * cols");
    }
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(entries[static_cast<std::size_t>(i * cols + c)]);
    return m;
}

Json vector_to_json(const Vector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Vector vector_from_json(const Json &j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "vector must be a list of [re, im]");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

Json spectrum_to_json(const SpectrumMultiset &s) {
    Json out = Json::array();
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        out.push_back(Json{{"value", complex_to_json(s.values[i])}, {"multiplicity", s.multiplicities[i]}});
    }
    return out;
}

Json history_to_json(const History &h) {
    Json states = Json::array();
    for (const Vector &s : h.states) states.push_back(vector_to_json(s));
    return Json{{"n", h.ticks()}, {"dim_r", h.dim_r}, {"states", std::move(states)}};
}

History history_from_json(const Json &j) {
    History h;
    const int n = j.at("n").get<int>();
    h.dim_r = j.at("dim_r").get<int>();
    const Json &states = j.at("states");
    if (n < 1 || h.dim_r < 1 || !states.is_array() || states.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::InvalidHistory, "history must carry n states");
    }
    for (const Json &s : states) {
        h.states.push_back(vector_from_json(s));
        if (h.states.back().size() != h.dim_r) throw Error(ErrorKind::InvalidHistory, "history state has wrong dimension");
    }
    return h;
}

Json tps_to_json(const Tps &t) { return Json{{"dim_c", t.dim_c}, {"dim_r", t.dim_r}, {"iso", matrix_to_json(t.iso)}}; }

Tps tps_from_json(const Json &j) {
    return Tps(j.at("dim_c").get<int>(), j.at("dim_r").get<int>(), matrix_from_json(j.at("iso")));
}

}  // namespace pwlab
