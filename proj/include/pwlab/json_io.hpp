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

#ifndef PWLAB_JSON_IO_HPP
#define PWLAB_JSON_IO_HPP

#include <json.hpp>

#include "pwlab/linalg.hpp"
#include "pwlab/pw.hpp"
#include "pwlab/tps.hpp"

namespace pwlab {

using Json = nlohmann::ordered_json;

// Matrix: {"rows":n,"cols":m,"entries":[[re,im],...]} in row-major order.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// Vectors are lists of [re, im] pairs.
Json vector_to_json(const Vector &v);
Vector vector_from_json(const Json &j);

/// [{"value":[re,im],"multiplicity":k},...]
Json spectrum_to_json(const SpectrumMultiset &s);

// History: {"n":..., "dim_r":..., "states":[[[re,im],...],...]}
Json history_to_json(const History &h);
History history_from_json(const Json &j);

// Tps: {"dim_c":..., "dim_r":..., "iso": matrix}
Json tps_to_json(const Tps &t);
Tps tps_from_json(const Json &j);

}  // namespace pwlab

#endif  // PWLAB_JSON_IO_HPP
