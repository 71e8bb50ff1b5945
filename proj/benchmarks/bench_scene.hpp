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

#include <string>

#include "irsroute/scenario.hpp"

namespace irsroute::bench {

inline ScenarioConfig paperlike(int m0 = 0)
{
    ScenarioConfig sc = parse_scenario(std::string(IRSROUTE_FIXTURE_DIR) + "/paperlike-7irs.json");
    if (m0 > 0)
        for (auto &p : sc.irs)
            p.m0 = m0;
    return sc;
}

} // namespace irsroute::bench
