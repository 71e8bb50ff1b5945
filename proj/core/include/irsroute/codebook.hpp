// SPDX-License-Identifier: Apache-2.0
//
// irsroute - multi-IRS multi-path beam routing simulator
// Copyright (C) 2026 The irsroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "irsroute/geometry.hpp"

namespace irsroute {

// Immutable set of unit-norm complex beams of a common dimension.
class Codebook
{
  public:
    Codebook() = default;

    // Throws std::invalid_argument if the vectors are empty, ragged or not
    // unit-norm (to 1e-9).
    explicit Codebook(std::vector<CVector> vectors);

    int size() const { return static_cast<int>(vectors_.size()); }
    Eigen::Index dimension() const { return vectors_.empty() ? 0 : vectors_.front().size(); }
    bool empty() const { return vectors_.empty(); }
    const CVector &operator[](int index) const { return vectors_.at(static_cast<std::size_t>(index)); }
    const std::vector<CVector> &vectors() const { return vectors_; }

  private:
    std::vector<CVector> vectors_;
};

// Oversampled DFT codebook: codeword k has element m = exp(j 2 pi k m / size) / sqrt(n).
// Requires size >= n >= 1.
Codebook dft_codebook(int size, int n);

// Same construction without the size >= n requirement: a grid of `size`
// linear phase slopes over n elements. Used for IRS phase-only codebooks,
// where a coarse grid (fewer beams than elements) is still a valid choice.
Codebook dft_grid_codebook(int size, int n);

struct BsBeamChoice
{
    int index = -1;
    cdouble value{};  // bs_response^H * w at the chosen codeword
};

// argmax_w |bs_response^H w|, lowest index on ties.
BsBeamChoice best_bs_beam(const Codebook &codebook, const CVector &bs_response);

struct IrsBeamSelection
{
    int h_index = -1;
    int v_index = -1;
    CVector theta;    // unit-modulus reflection coefficients
    cdouble gain{};   // outgoing^H diag(theta) incoming
};

// Phase-only reflection vector kron(v, h) with both codewords rescaled to
// unit-modulus entries. Ordering matches upa_response (vertical-major).
CVector irs_reflection_vector(const Codebook &cb_h, const Codebook &cb_v, int h_index, int v_index);

// Exhaustive search over cb_v x cb_h for the reflection vector maximizing
// |outgoing^H diag(theta) incoming|. Ties resolve to the lowest v index, then
// the lowest h index.
IrsBeamSelection best_irs_beam(const Codebook &cb_h, const Codebook &cb_v, const CVector &incoming,
                               const CVector &outgoing);

} // namespace irsroute
