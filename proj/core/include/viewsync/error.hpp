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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace viewsync {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value, property map, or operation argument failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A scene path, GUI uid, or client id does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// An operation was attempted through a handle whose element was removed,
/// or through a client handle whose connection is gone.
class UseAfterRemoveError : public Error {
public:
    using Error::Error;
};

/// A message does not match the message registry (unregistered type,
/// missing field, wrong field type).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A binary frame could not be decoded. `offset()` is the byte position at
/// which decoding failed.
class DecodeError : public Error {
public:
    DecodeError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A peer violated the wire protocol (out-of-order seq, ill-typed update, ...).
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// The server could not bind its listening socket.
class BindError : public Error {
public:
    using Error::Error;
};

/// The server refused a client handshake.
class HandshakeRejected : public Error {
public:
    using Error::Error;
};

}  // namespace viewsync
