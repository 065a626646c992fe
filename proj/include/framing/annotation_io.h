// Copyright 2026 The Framing Authors.
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

#ifndef FRAMING_ANNOTATION_IO_H_
#define FRAMING_ANNOTATION_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "framing/frames.h"

namespace framing {

// One FrameAnnotation per line; absent frames are written as null. Key
// order is fixed so output is byte-stable.
std::string AnnotationToJson(const FrameAnnotation &a);
FrameAnnotation AnnotationFromJson(std::string_view line);

std::string WriteAnnotations(const std::vector<FrameAnnotation> &annotations);
std::vector<FrameAnnotation> ParseAnnotations(std::string_view jsonl);
std::vector<FrameAnnotation> LoadAnnotations(const std::filesystem::path &path);

}  // namespace framing

#endif  // FRAMING_ANNOTATION_IO_H_
