// Copyright 2026 The Cepstra Authors
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

#include "cepstra/util.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

#include "cepstra/error.hpp"

namespace cepstra {

std::string format_double(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string format_double_12g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

namespace {

// Splits a to_chars result ("0.425", "1.5e3", "-2e-07") into sign, digit
// string and the position of the decimal point within it.
struct DecimalParts {
  bool negative = false;
  std::string digits;
  int point = 0;  // value == digits * 10^(point - digits.size())
};

DecimalParts split_decimal(const std::string& text) {
  DecimalParts parts;
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    parts.negative = text[0] == '-';
    pos = 1;
  }
  int exp10 = 0;
  std::size_t epos = text.find_first_of("eE", pos);
  std::string mantissa = text.substr(pos, epos == std::string::npos
                                              ? std::string::npos
                                              : epos - pos);
  if (epos != std::string::npos) exp10 = std::stoi(text.substr(epos + 1));
  parts.point = -1;
  for (char c : mantissa) {
    if (c == '.') {
      parts.point = static_cast<int>(parts.digits.size());
    } else {
      parts.digits.push_back(c);
    }
  }
  if (parts.point < 0) parts.point = static_cast<int>(parts.digits.size());
  parts.point += exp10;
  return parts;
}

}  // namespace

std::string format_fixed(double value, int places) {
  DecimalParts parts = split_decimal(format_double(value));
  const int ndigits = static_cast<int>(parts.digits.size());

  std::string int_digits, frac_digits;
  if (parts.point <= 0) {
    int_digits = "0";
    frac_digits = std::string(static_cast<std::size_t>(-parts.point), '0') + parts.digits;
  } else if (parts.point >= ndigits) {
    int_digits = parts.digits + std::string(static_cast<std::size_t>(parts.point - ndigits), '0');
  } else {
    int_digits = parts.digits.substr(0, static_cast<std::size_t>(parts.point));
    frac_digits = parts.digits.substr(static_cast<std::size_t>(parts.point));
  }

  if (static_cast<int>(frac_digits.size()) > places) {
    const bool round_up = frac_digits[static_cast<std::size_t>(places)] >= '5';
    frac_digits.resize(static_cast<std::size_t>(places));
    if (round_up) {
      std::string all = int_digits + frac_digits;
      int i = static_cast<int>(all.size()) - 1;
      for (; i >= 0; --i) {
        if (all[static_cast<std::size_t>(i)] == '9') {
          all[static_cast<std::size_t>(i)] = '0';
        } else {
          ++all[static_cast<std::size_t>(i)];
          break;
        }
      }
      if (i < 0) all.insert(all.begin(), '1');
      int_digits = all.substr(0, all.size() - static_cast<std::size_t>(places));
      frac_digits = all.substr(all.size() - static_cast<std::size_t>(places));
    }
  } else {
    frac_digits += std::string(static_cast<std::size_t>(places) - frac_digits.size(), '0');
  }

  std::size_t first = int_digits.find_first_not_of('0');
  int_digits = first == std::string::npos ? "0" : int_digits.substr(first);

  std::string out = int_digits;
  if (places > 0) {
    out += '.';
    out += frac_digits;
  }
  const bool all_zero = out.find_first_not_of("0.") == std::string::npos;
  if (parts.negative && !all_zero) out.insert(out.begin(), '-');
  return out;
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const std::uint8_t*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t fnv1a64(std::string_view text) {
  return fnv1a64(text.data(), text.size());
}

std::string hex_digest(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return std::string(buf);
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kFileNotFound, "cannot open " + path.string());
  in.seekg(0, std::ios::end);
  const std::streamoff size = in.tellg();
  in.seekg(0, std::ios::beg);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size < 0 ? 0 : size));
  if (!bytes.empty()) {
    in.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  }
  if (!in) raise(ErrorCode::kIoError, "short read on " + path.string());
  return bytes;
}

std::string read_file_text(const std::filesystem::path& path) {
  auto bytes = read_file_bytes(path);
  return std::string(bytes.begin(), bytes.end());
}

void atomic_write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::kIoError, "cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(ErrorCode::kIoError, "short write on " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) raise(ErrorCode::kIoError, "cannot rename " + tmp.string() + ": " + ec.message());
}

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(jobs < 1 ? 1 : jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cepstra
