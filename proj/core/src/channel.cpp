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

#include "irsroute/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "irsroute/random.hpp"

namespace irsroute {

double reference_gain(double frequency_hz)
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw std::invalid_argument("reference_gain: frequency must be positive");
    const double ratio = kSpeedOfLight / (4.0 * std::numbers::pi * frequency_hz);
    return ratio * ratio;
}

CarrierSpec CarrierSpec::at(double frequency_hz)
{
    reference_gain(frequency_hz);
    return CarrierSpec{frequency_hz};
}

CMatrix LosChannel::matrix() const
{
    return amplitude * rx_response * tx_response.adjoint();
}

LosChannel los_link(const Endpoint &tx, const Endpoint &rx, const CarrierSpec &carrier)
{
    LosChannel link;
    const bool tx_bs = std::holds_alternative<BsPose>(tx);
    const bool tx_irs = std::holds_alternative<IrsPose>(tx);
    const bool rx_irs = std::holds_alternative<IrsPose>(rx);
    const bool rx_user = std::holds_alternative<UserPose>(rx);
    if (tx_bs && rx_irs)
        link.kind = LinkKind::bs_to_irs;
    else if (tx_irs && rx_irs)
        link.kind = LinkKind::irs_to_irs;
    else if (tx_irs && rx_user)
        link.kind = LinkKind::irs_to_user;
    else
        throw std::invalid_argument("los_link: unsupported node pairing");

    const Vec3 &a = position_of(tx);
    const Vec3 &b = position_of(rx);
    link.distance = (b - a).norm();
    if (!(link.distance > 0.0))
        throw std::invalid_argument("los_link: coincident positions");
    link.amplitude = std::sqrt(carrier.beta()) / link.distance;
    link.tx_response = response_toward(tx, b);
    link.rx_response = response_toward(rx, a);
    return link;
}

CMatrix rayleigh_nlos(int rows, int cols, double distance, double rho, const CarrierSpec &carrier,
                      std::uint64_t seed)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("rayleigh_nlos: negative dimension");
    if (!(distance > 0.0))
        throw std::invalid_argument("rayleigh_nlos: distance must be positive");
    if (!(rho >= 2.0))
        throw std::invalid_argument("rayleigh_nlos: path-loss exponent must be >= 2");
    const double variance = carrier.beta() * std::pow(distance, -rho);
    Rng rng(seed);
    CMatrix out(rows, cols);
    // Row-major fill so the draw order does not depend on Eigen's storage.
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            out(r, c) = rng.complex_gaussian(variance);
    return out;
}

} // namespace irsroute
