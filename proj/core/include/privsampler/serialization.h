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

#ifndef PRIVSAMPLER_SERIALIZATION_H_
#define PRIVSAMPLER_SERIALIZATION_H_

#include <string>

#include "privsampler/mechanism.h"
#include "privsampler/mollifier.h"

namespace privsampler {

// Wire format for a mechanism: {"n": ..., "epsilon": ..., "prior": [...],
// "kernel": [[...], ...]} with row-major kernel entries. Doubles are
// emitted in their shortest round-trip decimal form, so parse(dump(x))
// recovers x bit-exactly. Unknown fields are ignored on read.
std::string BundleToJson(const MechanismBundle& bundle);
MechanismBundle BundleFromJson(const std::string& json);

// {"projected": [...], "normalizer": ... | null, "achievedDivergence": ...,
// "iterations": ...}.
std::string ProjectionResultToJson(const ProjectionResult& result);

}  // namespace privsampler

#endif  // PRIVSAMPLER_SERIALIZATION_H_
