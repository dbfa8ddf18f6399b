/*
 * Copyright 2026 The viewsync Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "viewsync/scene/scene_path.hpp"

#include <cctype>

#include "viewsync/error.hpp"

namespace viewsync {

ScenePath ScenePath::parse(std::string_view raw) {
    if (raw.empty()) {
        throw ValidationError("scene path is empty");
    }
    if (raw.front() != '/') {
        throw ValidationError("scene path '" + std::string(raw) + "' must start with '/'");
    }
    if (raw.size() == 1) {
        return ScenePath();
    }
    if (raw.back() == '/') {
        throw ValidationError("scene path '" + std::string(raw) + "' has a trailing '/'");
    }
    std::size_t start = 1;
    while (start <= raw.size()) {
        const std::size_t end = std::min(raw.find('/', start), raw.size());
        const std::string_view segment = raw.substr(start, end - start);
        if (segment.empty()) {
            throw ValidationError("scene path '" + std::string(raw) + "' has an empty segment");
        }
        for (char c : segment) {
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                throw ValidationError("scene path '" + std::string(raw) + "' contains whitespace");
            }
        }
        start = end + 1;
    }
    return ScenePath(std::string(raw));
}

std::vector<std::string> ScenePath::segments() const {
    std::vector<std::string> out;
    if (is_root()) return out;
    std::size_t start = 1;
    while (start <= text_.size()) {
        const std::size_t end = std::min(text_.find('/', start), text_.size());
        out.push_back(text_.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

ScenePath ScenePath::parent() const {
    if (is_root()) return *this;
    const std::size_t slash = text_.rfind('/');
    return slash == 0 ? ScenePath() : ScenePath(text_.substr(0, slash));
}

ScenePath ScenePath::child(std::string_view segment) const {
    return parse(is_root() ? "/" + std::string(segment) : text_ + "/" + std::string(segment));
}

bool ScenePath::is_ancestor_of(const ScenePath& other) const {
    if (is_root()) return !other.is_root();
    return other.text_.size() > text_.size() && other.text_.compare(0, text_.size(), text_) == 0 &&
           other.text_[text_.size()] == '/';
}

std::size_t ScenePath::depth() const {
    if (is_root()) return 0;
    std::size_t n = 0;
    for (char c : text_) n += c == '/' ? 1 : 0;
    return n;
}

}  // namespace viewsync
