#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loom::uni {

// Decodes UTF-8 into Unicode scalar values. Invalid bytes decode to U+FFFD,
// one replacement per offending byte, so decoding never fails.
std::vector<char32_t> decode(std::string_view utf8);

std::string encode(const std::vector<char32_t>& scalars);
void append(std::string& out, char32_t scalar);

bool is_space(char32_t c);
bool is_cjk(char32_t c);

// Count of non-whitespace scalar values; the length unit used throughout
// for text budgets and segmentation bounds.
std::size_t visible_length(std::string_view utf8);

// Longest prefix containing at most `max_scalars` scalar values
// (whitespace included), cut on a scalar boundary.
std::string truncate_scalars(std::string_view utf8, std::size_t max_scalars);

std::string trim(std::string_view text);

// Splits on '\n', tolerating "\r\n" line endings.
std::vector<std::string> split_lines(std::string_view text);

}  // namespace loom::uni
