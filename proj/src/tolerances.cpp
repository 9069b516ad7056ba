// Copyright 2026 The Phasekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasekit/tolerances.hpp"

namespace phasekit {

namespace {

template <typename Self>
auto fields(Self& t) {
  return std::map<std::string, decltype(&t.sym)>{
      {"sym", &t.sym},           {"recon", &t.recon},
      {"pd_rel", &t.pd_rel},     {"symmetric", &t.symmetric},
      {"psd", &t.psd},           {"toeplitz_margin", &t.toeplitz_margin},
      {"purity", &t.purity},     {"numerics", &t.numerics},
      {"norm", &t.norm},
  };
}

}  // namespace

bool Tolerances::set(const std::string& name, double value) {
  auto table = fields(*this);
  auto it = table.find(name);
  if (it == table.end()) return false;
  *it->second = value;
  return true;
}

std::map<std::string, double> Tolerances::as_map() const {
  std::map<std::string, double> out;
  for (const auto& [name, ptr] : fields(*this)) out[name] = *ptr;
  return out;
}

}  // namespace phasekit
