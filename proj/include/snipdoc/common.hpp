// Copyright 2026 The snipdoc Authors.
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

#ifndef SNIPDOC_COMMON_HPP
#define SNIPDOC_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snipdoc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source text could not be lexed or segmented into methods.
class ExtractionError : public Error {
 public:
  ExtractionError(const std::string& what, std::size_t offset, std::size_t line)
      : Error(what + " (offset " + std::to_string(offset) + ", line " +
              std::to_string(line) + ")"),
        offset_(offset),
        line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// An artifact file carries an unknown schema name or version.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must describe the same instances disagree.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& what, std::string offending_id)
      : Error(what + ": " + offending_id), id_(std::move(offending_id)) {}
  const std::string& offending_id() const { return id_; }

 private:
  std::string id_;
};

/// Statement line numbers (method-local, 1-based) documented by a comment.
/// Gaps are allowed.
using LinkSet = std::set<std::size_t>;

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

inline std::string to_hex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for a named pipeline stage, derived from the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage) {
  return splitmix64(master ^ fnv1a64(stage));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Unbiased integer in [0, bound) from a 64-bit engine. The standard
/// distributions are implementation-defined, this is not.
template <typename Engine>
std::size_t uniform_index(Engine& engine, std::size_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t n = bound;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % n);
}

template <typename T, typename Engine>
void seeded_shuffle(std::vector<T>& items, Engine& engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_index(engine, i)]);
  }
}

/// Uniform double in [0, 1) with 53 random bits.
template <typename Engine>
double uniform_unit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace snipdoc

#endif  // SNIPDOC_COMMON_HPP
