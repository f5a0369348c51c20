// Copyright 2026 The Smokegen Authors.
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

// Minimal placeholder templates.
//
//   {{name}}                 replaced by the binding for `name`
//   {{#each list}}...{{/each}}
//                            body repeated once per element of `list`;
//                            inside, element bindings shadow global ones
//
// Names are [A-Za-z0-9_]+. Blocks do not nest. Any placeholder without a
// binding is an error that names it.

#ifndef SMOKEGEN_SRC_TEMPLATE_H_
#define SMOKEGEN_SRC_TEMPLATE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace smokegen {

using Bindings = std::map<std::string, std::string>;

struct TemplateBindings {
  Bindings values;
  std::map<std::string, std::vector<Bindings>> lists;
};

// Throws TemplateError on malformed markers or unresolved placeholders.
std::string RenderTemplate(std::string_view body,
                           const TemplateBindings& bindings);

}  // namespace smokegen

#endif  // SMOKEGEN_SRC_TEMPLATE_H_
