// swara/utf8.h

// Copyright 2026 The Swara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWARA_UTF8_H_
#define SWARA_UTF8_H_

#include <string>
#include <string_view>

namespace swara::utf8 {

// Throws Error(kInvalidArgument) on malformed UTF-8.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view code_points);
std::string Encode(char32_t code_point);

}  // namespace swara::utf8

#endif  // SWARA_UTF8_H_
