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

#include <cstdint>

#include "irsroute/geometry.hpp"

namespace irsroute {

inline constexpr double kSpeedOfLight = 299792458.0;

// Free-space reference power gain at 1 m, (lambda / (4 pi))^2.
double reference_gain(double frequency_hz);

struct CarrierSpec
{
    double frequency_hz = 5e9;

    // Throws std::invalid_argument for a non-positive frequency.
    static CarrierSpec at(double frequency_hz);

    double wavelength() const { return kSpeedOfLight / frequency_hz; }
    double beta() const { return reference_gain(frequency_hz); }
};

enum class LinkKind
{
    bs_to_irs,
    irs_to_irs,
    irs_to_user,
};

// Rank-one far-field LoS channel: amplitude * rx_response * tx_response^H.
struct LosChannel
{
    LinkKind kind = LinkKind::bs_to_irs;
    CVector rx_response;
    CVector tx_response;
    double amplitude = 0.0;
    double distance = 0.0;

    CMatrix matrix() const;
};

// tx must be a BS or IRS, rx an IRS or the user; BS-to-user links are not
// modelled. Throws std::invalid_argument on coincident positions or an
// unsupported node pairing.
LosChannel los_link(const Endpoint &tx, const Endpoint &rx, const CarrierSpec &carrier);

// i.i.d. CN(0, beta * distance^-rho) entries; deterministic in the seed.
CMatrix rayleigh_nlos(int rows, int cols, double distance, double rho, const CarrierSpec &carrier,
                      std::uint64_t seed);

} // namespace irsroute
