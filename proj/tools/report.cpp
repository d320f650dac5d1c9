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

#include "report.hpp"

#include <cstdio>

namespace extbloch::cli {

std::string format_complex(const Complex& c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%+.9g%+.9gi", c.real(), c.imag());
  return buf;
}

void print_cmatrix(std::ostream& out, const CMatrix& m, const std::string& indent) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << "  ";
      out << format_complex(m(i, j));
    }
    out << "]\n";
  }
}

void print_rvector(std::ostream& out, const RVector& v) {
  char buf[32];
  out << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    std::snprintf(buf, sizeof(buf), "%.9g", v(i));
    out << buf;
  }
  out << "]";
}

}  // namespace extbloch::cli
