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

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace viewsync {

/// Canonical slash-separated scene address ("/", "/robot/base/link0").
///
/// Segments are non-empty and contain neither '/' nor whitespace. Ordering is
/// plain lexicographic order of the canonical string, so a parent always sorts
/// before its descendants.
class ScenePath {
public:
    /// The root path "/".
    ScenePath() : text_("/") {}

    /// Throws ValidationError on non-canonical input.
    static ScenePath parse(std::string_view raw);
    static ScenePath root() { return ScenePath(); }

    const std::string& str() const { return text_; }
    std::vector<std::string> segments() const;
    bool is_root() const { return text_.size() == 1; }

    /// Parent path; the root's parent is the root.
    ScenePath parent() const;
    ScenePath child(std::string_view segment) const;

    /// True if `other` lies strictly below this path.
    bool is_ancestor_of(const ScenePath& other) const;
    /// True if this path equals `other` or lies below it.
    bool is_within(const ScenePath& other) const { return *this == other || other.is_ancestor_of(*this); }

    std::size_t depth() const;

    friend bool operator==(const ScenePath&, const ScenePath&) = default;
    friend std::strong_ordering operator<=>(const ScenePath& a, const ScenePath& b) { return a.text_ <=> b.text_; }

private:
    explicit ScenePath(std::string canonical) : text_(std::move(canonical)) {}

    std::string text_;
};

/// Orders paths like ScenePath's own ordering and also accepts raw strings,
/// which lets a map look up the half-open range holding one subtree.
struct PathLess {
    using is_transparent = void;
    bool operator()(const ScenePath& a, const ScenePath& b) const { return a.str() < b.str(); }
    bool operator()(const ScenePath& a, std::string_view b) const { return a.str() < b; }
    bool operator()(std::string_view a, const ScenePath& b) const { return a < b.str(); }
};

}  // namespace viewsync
