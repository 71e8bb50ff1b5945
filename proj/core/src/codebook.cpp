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

#include "irsroute/codebook.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsroute {

namespace {

// Rows are codewords rescaled to unit-modulus entries.
CMatrix phase_rows(const Codebook &cb)
{
    const double scale = std::sqrt(static_cast<double>(cb.dimension()));
    CMatrix rows(cb.size(), cb.dimension());
    for (int i = 0; i < cb.size(); ++i)
        rows.row(i) = scale * cb[i].transpose();
    return rows;
}

} // namespace

Codebook::Codebook(std::vector<CVector> vectors) : vectors_(std::move(vectors))
{
    if (vectors_.empty())
        throw std::invalid_argument("Codebook: no codewords");
    const auto dim = vectors_.front().size();
    for (const auto &v : vectors_)
    {
        if (v.size() != dim || dim == 0)
            throw std::invalid_argument("Codebook: codewords must share a non-zero dimension");
        if (std::abs(v.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("Codebook: codewords must be unit-norm");
    }
}

Codebook dft_codebook(int size, int n)
{
    if (n < 1)
        throw std::invalid_argument("dft_codebook: n must be >= 1");
    if (size < n)
        throw std::invalid_argument("dft_codebook: size must be >= n (undersampled codebooks are not supported)");
    return dft_grid_codebook(size, n);
}

Codebook dft_grid_codebook(int size, int n)
{
    if (n < 1 || size < 1)
        throw std::invalid_argument("dft_grid_codebook: size and n must be >= 1");
    std::vector<CVector> vectors;
    vectors.reserve(static_cast<std::size_t>(size));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < size; ++k)
    {
        CVector w(n);
        for (int m = 0; m < n; ++m)
        {
            // Reduce k*m modulo size first so the phase stays exact for large products.
            const auto phase_index = (static_cast<long long>(k) * m) % size;
            w[m] = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(phase_index) / size);
        }
        vectors.push_back(std::move(w));
    }
    return Codebook(std::move(vectors));
}

BsBeamChoice best_bs_beam(const Codebook &codebook, const CVector &bs_response)
{
    if (codebook.empty())
        throw std::invalid_argument("best_bs_beam: empty codebook");
    if (codebook.dimension() != bs_response.size())
        throw std::invalid_argument("best_bs_beam: dimension mismatch");
    BsBeamChoice best;
    double best_abs = -1.0;
    for (int i = 0; i < codebook.size(); ++i)
    {
        const cdouble value = bs_response.dot(codebook[i]);  // conjugates the left operand
        const double mag = std::abs(value);
        if (mag > best_abs)
        {
            best_abs = mag;
            best.index = i;
            best.value = value;
        }
    }
    return best;
}

CVector irs_reflection_vector(const Codebook &cb_h, const Codebook &cb_v, int h_index, int v_index)
{
    const double sh = std::sqrt(static_cast<double>(cb_h.dimension()));
    const double sv = std::sqrt(static_cast<double>(cb_v.dimension()));
    return kron(sv * cb_v[v_index], sh * cb_h[h_index]);
}

IrsBeamSelection best_irs_beam(const Codebook &cb_h, const Codebook &cb_v, const CVector &incoming,
                               const CVector &outgoing)
{
    if (cb_h.empty() || cb_v.empty())
        throw std::invalid_argument("best_irs_beam: empty codebook");
    const auto dim_h = cb_h.dimension();
    const auto dim_v = cb_v.dimension();
    if (incoming.size() != dim_h * dim_v || outgoing.size() != dim_h * dim_v)
        throw std::invalid_argument("best_irs_beam: response length does not match codebook dimensions");

    // gain(v, h) = sum_{kv,kh} uv[v][kv] * uh[h][kh] * conj(out[kv,kh]) * in[kv,kh]
    const CVector profile = outgoing.conjugate().cwiseProduct(incoming);
    using RowMajor = Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> grid(profile.data(), dim_v, dim_h);
    const CMatrix uh = phase_rows(cb_h);
    const CMatrix uv = phase_rows(cb_v);
    const CMatrix partial = grid * uh.transpose();  // dim_v x size_h
    const CMatrix gains = uv * partial;             // size_v x size_h

    IrsBeamSelection best;
    double best_abs = -1.0;
    for (int v = 0; v < cb_v.size(); ++v)
        for (int h = 0; h < cb_h.size(); ++h)
        {
            const double mag = std::abs(gains(v, h));
            if (mag > best_abs)
            {
                best_abs = mag;
                best.v_index = v;
                best.h_index = h;
            }
        }

    best.theta = irs_reflection_vector(cb_h, cb_v, best.h_index, best.v_index);
    best.gain = outgoing.conjugate().cwiseProduct(best.theta).cwiseProduct(incoming).sum();
    return best;
}

} // namespace irsroute
