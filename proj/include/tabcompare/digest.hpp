#pragma once

#include <string>
#include <string_view>

namespace tabcompare {

/// Lower-case hex SHA-256 of the bytes; used as content address for uploads and documents.
std::string sha256_hex(std::string_view bytes);

}  // namespace tabcompare
