// Copyright 2026 The freecurrents Authors
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

#ifndef FREECURRENTS_FREECURRENTS_HPP_
#define FREECURRENTS_FREECURRENTS_HPP_

#include "freecurrents/approx.hpp"
#include "freecurrents/core_graph.hpp"
#include "freecurrents/cylinders.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/fiber.hpp"
#include "freecurrents/io.hpp"
#include "freecurrents/rational.hpp"
#include "freecurrents/realize.hpp"
#include "freecurrents/round_graph.hpp"
#include "freecurrents/stallings.hpp"
#include "freecurrents/word.hpp"

#endif  // FREECURRENTS_FREECURRENTS_HPP_
