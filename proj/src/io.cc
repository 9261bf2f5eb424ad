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

#include "qht/io.h"

#include <openssl/evp.h>

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <system_error>

#include "qht/error.h"

namespace qht::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_number(std::string_view field, double &out) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    if (field.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc() && ptr == field.data() + field.size() && std::isfinite(out);
}

}  // namespace

CsvSignal parse_csv_signal(std::string_view text) {
    CsvSignal signal;
    std::size_t line_number = 0;
    std::size_t timed_rows = 0;
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    while (!text.empty()) {
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        ++line_number;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto comma = line.find(',');
        double value = 0;
        if (comma == std::string_view::npos) {
            if (!parse_number(line, value)) {
                throw QhtError(ErrorCode::NonNumericRow, "line " + std::to_string(line_number));
            }
        } else {
            double t = 0;
            if (!parse_number(line.substr(0, comma), t) || !parse_number(line.substr(comma + 1), value)) {
                throw QhtError(ErrorCode::NonNumericRow, "line " + std::to_string(line_number));
            }
            signal.times.push_back(t);
            ++timed_rows;
        }
        signal.values.push_back(value);
    }
    if (signal.values.empty()) {
        throw QhtError(ErrorCode::EmptyInput, "no samples");
    }
    if (timed_rows != signal.values.size()) {
        signal.times.clear();
    }
    return signal;
}

CsvSignal read_csv_signal(const std::filesystem::path &path) {
    const auto bytes = read_bytes(path);
    return parse_csv_signal(std::string_view(reinterpret_cast<const char *>(bytes.data()), bytes.size()));
}

std::size_t pad_to_power_of_two(std::vector<double> &values) {
    const std::size_t target = std::bit_ceil(std::max<std::size_t>(values.size(), 2));
    const std::size_t added = target - values.size();
    values.resize(target, 0.0);
    return added;
}

PgmImage parse_pgm(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    auto skip_space_and_comments = [&] {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') {
                    ++pos;
                }
            } else if (std::isspace(bytes[pos])) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_uint = [&](const char *what) {
        skip_space_and_comments();
        std::size_t value = 0;
        std::size_t digits = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            value = value * 10 + (bytes[pos] - '0');
            ++pos;
            if (++digits > 9) {
                throw QhtError(ErrorCode::BadPgmHeader, std::string(what) + " too large");
            }
        }
        if (digits == 0) {
            throw QhtError(ErrorCode::BadPgmHeader, std::string("missing ") + what);
        }
        return value;
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw QhtError(ErrorCode::BadPgmHeader, "expected P2 or P5 magic");
    }
    const bool binary = bytes[1] == '5';
    pos = 2;
    PgmImage image;
    image.width = read_uint("width");
    image.height = read_uint("height");
    const std::size_t maxval = read_uint("maxval");
    if (image.width == 0 || image.height == 0) {
        throw QhtError(ErrorCode::BadPgmHeader, "empty image");
    }
    if (maxval == 0 || maxval > 255) {
        throw QhtError(ErrorCode::BadPgmHeader, "maxval must be in 1..255");
    }
    image.maxval = static_cast<int>(maxval);
    const std::size_t count = image.width * image.height;
    image.pixels.reserve(count);
    if (binary) {
        if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
            throw QhtError(ErrorCode::BadPgmHeader, "missing separator before raster");
        }
        ++pos;
        if (bytes.size() - pos < count) {
            throw QhtError(ErrorCode::BadPgmHeader, "raster truncated");
        }
        image.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                            bytes.begin() + static_cast<std::ptrdiff_t>(pos + count));
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t v = read_uint("pixel");
            if (v > maxval) {
                throw QhtError(ErrorCode::BadPgmHeader, "pixel exceeds maxval");
            }
            image.pixels.push_back(static_cast<std::uint8_t>(v));
        }
    }
    for (auto p : image.pixels) {
        if (p > maxval) {
            throw QhtError(ErrorCode::BadPgmHeader, "pixel exceeds maxval");
        }
    }
    return image;
}

PgmImage read_pgm(const std::filesystem::path &path) {
    return parse_pgm(read_bytes(path));
}

std::vector<std::uint8_t> encode_pgm(const PgmImage &image) {
    const std::string header =
        "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n" + std::to_string(image.maxval) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    return out;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw QhtError(ErrorCode::Io, "cannot open " + path.string());
    }
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file_atomic(const std::filesystem::path &path, std::span<const std::uint8_t> bytes) {
    auto temp = path;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw QhtError(ErrorCode::Io, "cannot write " + temp.string());
        }
        out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw QhtError(ErrorCode::Io, "short write to " + temp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw QhtError(ErrorCode::Io, "cannot rename onto " + path.string());
    }
}

void write_file_atomic(const std::filesystem::path &path, std::string_view text) {
    write_file_atomic(path, std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 15]);
    }
    return out;
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

}  // namespace qht::io
