// Copyright 2026 The privsampler Authors
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

#ifndef PRIVSAMPLER_IO_UTIL_H_
#define PRIVSAMPLER_IO_UTIL_H_

#include <string>

namespace privsampler {

// Writes content atomically: writes to a sibling temp file and renames it
// over the destination. Throws IoError.
void WriteFileAtomic(const std::string& path, const std::string& content);

// Reads a whole file. Throws IoError.
std::string ReadFile(const std::string& path);

// Shortest decimal form of a double that parses back to the same bits.
std::string FormatDouble(double value);

}  // namespace privsampler

#endif  // PRIVSAMPLER_IO_UTIL_H_
