// SPDX-License-Identifier: Apache-2.0
//
// dofregion: exact DoF regions of the two-user MIMO broadcast channel
// Copyright (C) 2026 dofregion authors
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

#ifndef DOFREGION_DOFREGION_HPP
#define DOFREGION_DOFREGION_HPP

#include <dofregion/rational.hpp>
#include <dofregion/geometry.hpp>
#include <dofregion/regions.hpp>
#include <dofregion/corners.hpp>
#include <dofregion/allocation.hpp>
#include <dofregion/analysis.hpp>

#endif
