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

#include "src/template.h"

#include <algorithm>
#include <cctype>
#include <optional>

#include "src/error.h"

namespace smokegen {
namespace {

constexpr std::string_view kOpen = "{{";
constexpr std::string_view kClose = "}}";
constexpr std::string_view kEachPrefix = "#each ";
constexpr std::string_view kEachEnd = "/each";

bool ValidName(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string_view Strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Appends `body` to `out` with placeholders substituted from `scope` first,
// then `globals`. `body` must not contain block markers.
void Substitute(std::string_view body, const Bindings* scope,
                const Bindings& globals, std::string& out) {
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = body.find(kOpen, pos);
    if (open == std::string_view::npos) {
      out.append(body.substr(pos));
      return;
    }
    out.append(body.substr(pos, open - pos));
    const std::size_t close = body.find(kClose, open + kOpen.size());
    if (close == std::string_view::npos) {
      throw TemplateError("unterminated '{{' in template");
    }
    const std::string name(
        Strip(body.substr(open + kOpen.size(), close - open - kOpen.size())));
    if (!ValidName(name)) {
      throw TemplateError("invalid placeholder '{{" + name + "}}'");
    }
    const std::string* value = nullptr;
    if (scope != nullptr) {
      if (auto it = scope->find(name); it != scope->end()) value = &it->second;
    }
    if (value == nullptr) {
      if (auto it = globals.find(name); it != globals.end()) value = &it->second;
    }
    if (value == nullptr) {
      throw TemplateError("unresolved placeholder '" + name + "'");
    }
    out.append(*value);
    pos = close + kClose.size();
  }
}

struct Marker {
  std::size_t begin;
  std::size_t end;
  std::string inner;
};

std::optional<Marker> NextBlockMarker(std::string_view body, std::size_t from) {
  std::size_t pos = from;
  while (true) {
    const std::size_t open = body.find(kOpen, pos);
    if (open == std::string_view::npos) return std::nullopt;
    const std::size_t close = body.find(kClose, open + kOpen.size());
    if (close == std::string_view::npos) {
      throw TemplateError("unterminated '{{' in template");
    }
    std::string inner(
        Strip(body.substr(open + kOpen.size(), close - open - kOpen.size())));
    if (!inner.empty() && (inner.front() == '#' || inner.front() == '/')) {
      return Marker{open, close + kClose.size(), std::move(inner)};
    }
    pos = close + kClose.size();
  }
}

}  // namespace

std::string RenderTemplate(std::string_view body,
                           const TemplateBindings& bindings) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    std::optional<Marker> start = NextBlockMarker(body, pos);
    if (!start) {
      Substitute(body.substr(pos), nullptr, bindings.values, out);
      return out;
    }
    if (!start->inner.starts_with(kEachPrefix)) {
      throw TemplateError("unexpected block marker '{{" + start->inner +
                          "}}'");
    }
    const std::string list_name(Strip(
        std::string_view(start->inner).substr(kEachPrefix.size())));
    if (!ValidName(list_name)) {
      throw TemplateError("invalid list name in '{{" + start->inner + "}}'");
    }
    std::optional<Marker> stop = NextBlockMarker(body, start->end);
    if (!stop) {
      throw TemplateError("missing '{{/each}}' for list '" + list_name + "'");
    }
    if (stop->inner != kEachEnd) {
      throw TemplateError("nested or stray block marker '{{" + stop->inner +
                          "}}'");
    }
    auto list = bindings.lists.find(list_name);
    if (list == bindings.lists.end()) {
      throw TemplateError("unresolved placeholder '" + list_name + "'");
    }

    Substitute(body.substr(pos, start->begin - pos), nullptr, bindings.values,
               out);
    const std::string_view block =
        body.substr(start->end, stop->begin - start->end);
    for (const Bindings& element : list->second) {
      Substitute(block, &element, bindings.values, out);
    }
    pos = stop->end;
  }
}

}  // namespace smokegen
