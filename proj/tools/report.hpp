// Copyright 2026 The extbloch authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>

#include "extbloch/mat_kernel.hpp"

namespace extbloch::cli {

/// Fixed-layout printers for the text output format. Deterministic: same
/// values, same bytes.
std::string format_complex(const Complex& c);
void print_cmatrix(std::ostream& out, const CMatrix& m, const std::string& indent = "  ");
void print_rvector(std::ostream& out, const RVector& v);

}  // namespace extbloch::cli
