// Copyright 2026 The QHT Authors
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

#ifndef QHT_IO_H
#define QHT_IO_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qht::io {

/// One sample per line, or "t,value". Lines starting with '#' and blank
/// lines are skipped.
struct CsvSignal {
    std::vector<double> values;
    std::vector<double> times;  // empty unless every row carried a time
};

CsvSignal parse_csv_signal(std::string_view text);
CsvSignal read_csv_signal(const std::filesystem::path &path);

/// Zero-pads up to the next power of two. Returns the number of samples added.
std::size_t pad_to_power_of_two(std::vector<double> &values);

struct PgmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    int maxval = 255;
    std::vector<std::uint8_t> pixels;  // row-major
};

/// P2 (ASCII) or P5 (binary), maxval 1..255.
PgmImage parse_pgm(std::span<const std::uint8_t> bytes);
PgmImage read_pgm(const std::filesystem::path &path);
/// Canonical P5 encoding: "P5\n<w> <h>\n255\n" followed by the pixels.
std::vector<std::uint8_t> encode_pgm(const PgmImage &image);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path &path);
/// Writes to a sibling temp file, then renames over path.
void write_file_atomic(const std::filesystem::path &path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::filesystem::path &path, std::string_view text);

std::string sha256_hex(std::span<const std::uint8_t> bytes);

/// Shortest representation that parses back to the same double.
std::string format_double(double value);

}  // namespace qht::io

#endif
