// rfso - outage analysis for mixed RF/FSO relaying with partial relay selection
// Copyright (C) 2026 The rfso authors
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

#include "rfso/analytic.hpp"
#include "rfso/channel.hpp"
#include "rfso/error.hpp"
#include "rfso/mcsim.hpp"
#include "rfso/meijer_g.hpp"
#include "rfso/presets.hpp"
#include "rfso/rng.hpp"
#include "rfso/scenario.hpp"
#include "rfso/specfun.hpp"
#include "rfso/sweep.hpp"
