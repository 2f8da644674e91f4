// Copyright 2026 the discphase authors
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

#ifndef DISCPHASE_CORE_FORMAT_HPP
#define DISCPHASE_CORE_FORMAT_HPP

#include <cstdio>
#include <string>

namespace discphase {

// 17 significant decimal digits: enough to reproduce any double exactly on
// re-parse, and byte-stable across runs. Used by the instance writer and the
// CSV emitters, whose outputs are compared byte-for-byte in tests.
//
// Integral values gain a ".0" suffix so JSON parsers keep them in the float
// domain; a bare "-0" would otherwise come back as integer zero with the
// sign bit dropped.
inline std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string text = buf;
  if (text.find_first_of(".eE") == std::string::npos) text += ".0";
  return text;
}

}  // namespace discphase

#endif
