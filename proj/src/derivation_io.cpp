/* Copyright 2026 The Contingency Workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cctype>
#include <charconv>
#include <sstream>

#include "cwb/errors.hpp"
#include "cwb/proofs.hpp"

namespace cwb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool read_int(std::string_view s, int* out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Justification read_justification(std::string_view text, int file_line) {
  auto w = words(text);
  auto fail = [&](const std::string& msg) -> Justification { throw DerivationFormatError(file_line, msg); };
  if (w.empty()) return fail("missing justification");
  if (w[0] == "taut" && w.size() == 1) return Justification::taut();
  if (w[0].starts_with("ax:") && w.size() == 1) {
    const std::string_view name = w[0].substr(3);
    if (name == "EQU") return Justification::axiom_of(Schema::Equ);
    if (name == "M") return Justification::axiom_of(Schema::Mono);
    if (name == "C") return Justification::axiom_of(Schema::Conj);
    if (name == "N") return Justification::axiom_of(Schema::Unit);
    return fail("unknown axiom '" + std::string(name) + "'");
  }
  int a = 0, b = 0;
  if (w[0] == "mp" && w.size() == 3 && read_int(w[1], &a) && read_int(w[2], &b)) return Justification::mp(a, b);
  if (w[0] == "re" && w.size() == 2 && read_int(w[1], &a)) return Justification::re(a);
  return fail("unreadable justification '" + std::string(trim(text)) + "'");
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  std::istringstream in{std::string(text)};
  std::string raw;
  int file_line = 0;
  while (std::getline(in, raw)) {
    ++file_line;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto dot = line.find('.');
    int number = 0;
    if (dot == std::string_view::npos || !read_int(line.substr(0, dot), &number))
      throw DerivationFormatError(file_line, "expected 'N. <formula> ; <justification>'");
    std::string_view rest = line.substr(dot + 1);
    const auto semi = rest.rfind(';');
    if (semi == std::string_view::npos) throw DerivationFormatError(file_line, "missing ';' before justification");

    std::optional<Formula> formula;
    try {
      formula = parse(rest.substr(0, semi), Mode::Core);
    } catch (const ParseError& e) {
      throw DerivationFormatError(file_line, e.what());
    }
    d.lines.push_back(ProofLine{number, *formula, read_justification(rest.substr(semi + 1), file_line)});
  }
  return d;
}

}  // namespace cwb
