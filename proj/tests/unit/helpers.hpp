#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tabcompare/tabtext.hpp"

namespace tabtest {

inline std::string fixture_path(const std::string& relative) {
  return std::string(TABCOMPARE_FIXTURES) + "/" + relative;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string read_fixture(const std::string& relative) { return read_text(fixture_path(relative)); }

/// Parses a one-track body (beats and bar lines) under standard tuning.
inline tabcompare::Track track_of(const std::string& body) {
  return tabcompare::parse_tabtext("\\track \"t\"\n" + body).tracks.at(0);
}

inline tabcompare::Bar bar_of(const std::string& body) { return track_of(body).bars.at(0); }

}  // namespace tabtest
