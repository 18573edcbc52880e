// Copyright 2026 The sortnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "sortnet/analysis.hpp"
#include "sortnet/bitslice.hpp"
#include "sortnet/circuit.hpp"
#include "sortnet/constructions.hpp"
#include "sortnet/diagram.hpp"
#include "sortnet/dot.hpp"
#include "sortnet/network.hpp"
#include "sortnet/poset.hpp"
#include "sortnet/schedule.hpp"
#include "sortnet/text_format.hpp"
#include "sortnet/verify.hpp"
