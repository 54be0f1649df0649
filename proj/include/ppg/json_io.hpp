#pragma once

#include <string>

#include "ppg/conditions.hpp"
#include "ppg/graph.hpp"
#include "ppg/placement.hpp"

namespace ppg {

struct Transcript;

// Instance wire format:
//   {"n": int, "edges": [{"a": int, "b": int, "round": 1|2, "len": "num/den"}]}
// Rationals travel as exact "num/den" strings.
std::string instance_to_json(const Ppg& g);
Ppg instance_from_json(const std::string& text);

std::string lengths_to_json(const ThreePathLengths& lengths);
ThreePathLengths lengths_from_json(const std::string& text);

std::string placement_to_json(const Placement& p);
Placement placement_from_json(const std::string& text);

std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ppg
