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

// Readable gtest output for library types.

#ifndef FREECURRENTS_TESTS_PRINTERS_HPP_
#define FREECURRENTS_TESTS_PRINTERS_HPP_

#include <ostream>

#include "freecurrents.hpp"

namespace freecurrents {

inline void PrintTo(const Word& w, std::ostream* os) { *os << to_string(w); }
inline void PrintTo(const RoundGraph& t, std::ostream* os) {
  *os << "{" << to_string(t) << "}/r" << t.radius();
}
inline void PrintTo(const LensClass& j, std::ostream* os) { *os << to_string(j); }
inline void PrintTo(const WeightTable& t, std::ostream* os) {
  *os << "table(rank " << t.basis().rank() << ", radius " << t.radius() << ")";
  for (const auto& [key, v] : t.entries()) *os << " {" << to_string(key) << "}=" << to_string(v);
}

}  // namespace freecurrents

inline void PrintTo(const mpq_class& q, std::ostream* os) { *os << freecurrents::to_string(q); }

#endif  // FREECURRENTS_TESTS_PRINTERS_HPP_
